use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::scalar::Scalar;
use super::CoeffElem;

/// Element of the fraction field ℚ(q, Q1..Q7) as a single numerator over a single
/// denominator.
///
/// Fractions are reduced only by integer content, monomial denominators and exact
/// division; equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// `num / den`; panics on a zero denominator (use [`RatFunc::try_new`] otherwise).
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        Self::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: MultiPoly, den: MultiPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(RatFunc { num, den }.normalized())
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    /// The value as a Laurent polynomial when the denominator divides out.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            self.num.div_exact(&self.den)
        }
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return self;
        }
        if self.den.is_one() {
            return self;
        }
        if let Some(inv) = self.den.try_inv() {
            return RatFunc { num: self.num * &inv, den: MultiPoly::one() };
        }
        if let Some(p) = self.num.div_exact(&self.den) {
            return RatFunc { num: p, den: MultiPoly::one() };
        }
        let c = self.den.content();
        let inv = c.recip();
        // clear the lowest power of q from the denominator
        let lo = self.den.q_range().map_or(0, |r| r.0);
        RatFunc { num: self.num.scale(&inv).shift_q(-lo), den: self.den.scale(&inv).shift_q(-lo) }
    }

    pub fn is_zero_value(&self) -> bool {
        self.num.is_zero()
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.clone() * &other.den == other.num.clone() * &self.den
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(MultiPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(MultiPoly::one())
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<'a> AddAssign<&'a RatFunc> for RatFunc {
    fn add_assign(&mut self, o: &'a RatFunc) {
        let new = if self.den == o.den {
            RatFunc { num: std::mem::take(&mut self.num) + o.num.clone(), den: self.den.clone() }
        } else {
            let num = self.num.clone() * &o.den + o.num.clone() * &self.den;
            RatFunc { num, den: self.den.clone() * &o.den }
        };
        *self = new.normalized();
    }
}

impl<'a> SubAssign<&'a RatFunc> for RatFunc {
    fn sub_assign(&mut self, o: &'a RatFunc) {
        *self += &(-o.clone());
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(mut self, o: RatFunc) -> RatFunc {
        self += &o;
        self
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(mut self, o: RatFunc) -> RatFunc {
        self -= &o;
        self
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &'a RatFunc) -> RatFunc {
        if self.num.is_zero() || o.num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num * &o.num, den: self.den * &o.den }.normalized()
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        self * &o
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, o: RatFunc) -> RatFunc {
        let inv = o.try_inv().expect("division by zero");
        self * &inv
    }
}

impl Scalar for RatFunc {
    fn from_int(v: i64) -> Self {
        RatFunc::from_poly(MultiPoly::from_int(v))
    }

    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc { num: self.den.clone(), den: self.num.clone() }.normalized())
        }
    }

    fn is_unit(&self) -> bool {
        !self.num.is_zero()
    }

    fn weight(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    fn to_coeff(&self) -> CoeffElem {
        CoeffElem::Generic(self.clone())
    }

    fn from_coeff(c: &CoeffElem) -> Option<Self> {
        match c {
            CoeffElem::Generic(x) => Some(x.clone()),
            CoeffElem::Rational(x) => Some(RatFunc::from_poly(MultiPoly::constant(x.clone()))),
            CoeffElem::Cyclotomic(_) => None,
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_operations() {
        let q = RatFunc::from_poly(MultiPoly::q());
        let one = RatFunc::one();
        assert_eq!((q.clone() - one.clone()) + one.clone(), q);
        let a = RatFunc::new(MultiPoly::one(), MultiPoly::one() + MultiPoly::q());
        let b = a.try_inv().unwrap();
        assert_eq!(a.clone() * &b, one);
        // 1/(1+q) + q/(1+q) = 1
        let c = a.clone() + a.clone() * &q;
        assert!(c.den().is_one());
        assert_eq!(c, one);
        let qinv = q.try_inv().unwrap();
        assert_eq!(qinv.to_string(), "q^-1");
    }
}
