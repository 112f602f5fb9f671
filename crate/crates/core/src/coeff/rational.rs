use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::Scalar;
use super::CoeffElem;

/// An exact rational stored inline while numerator and denominator fit in an `i64`,
/// falling back to a boxed [`BigRational`] otherwise.
///
/// The representation is canonical: a value is `Small` exactly when it fits, so derived
/// equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced, with a positive denominator.
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn fits(v: i128) -> Option<i64> {
    if v > i64::MIN as i128 && v <= i64::MAX as i128 {
        Some(v as i64)
    } else {
        None
    }
}

impl Rational {
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_i128(n as i128, d as i128)
    }

    /// `n/d` with `d > 0` and the two already coprime.
    fn from_parts(n: i128, d: i128) -> Self {
        match (fits(n), fits(d)) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Self::from_big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_i128(mut n: i128, mut d: i128) -> Self {
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        Self::from_parts(n, d)
    }

    pub fn from_big(b: BigRational) -> Self {
        if let (Some(n), Some(d)) = (b.numer().to_i64(), b.denom().to_i64()) {
            if n != i64::MIN && d != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(Box::new(b)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    fn big_op(&self, o: &Self, f: impl Fn(BigRational, BigRational) -> BigRational) -> Self {
        Self::from_big(f(self.to_big(), o.to_big()))
    }

    fn add_ref(&self, o: &Self) -> Self {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    return Self::from_i128(a + c, b);
                }
                let g = b.gcd(&d);
                let t = a * (d / g) + c * (b / g);
                if t == 0 {
                    return Rational::zero();
                }
                let g2 = t.gcd(&g);
                Self::from_parts(t / g2, (b / g) * (d / g2))
            }
            _ => self.big_op(o, |x, y| x + y),
        }
    }

    fn mul_ref_impl(&self, o: &Self) -> Self {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if a == 0 || c == 0 {
                    return Rational::zero();
                }
                let g1 = a.gcd(&d);
                let g2 = c.gcd(&b);
                Self::from_parts((a / g1) * (c / g2), (b / g2) * (d / g1))
            }
            _ => self.big_op(o, |x, y| x * y),
        }
    }

    pub fn recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }
}

impl From<BigRational> for Rational {
    fn from(b: BigRational) -> Self {
        Rational::from_big(b)
    }
}

impl From<&Rational> for BigRational {
    fn from(r: &Rational) -> Self {
        r.to_big()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Self {
        match self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, d)),
            Repr::Big(b) => Rational::from_big(-*b),
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, o: Self) -> Self {
        self.add_ref(&-o)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, o: Self) -> Self {
        self.mul_ref_impl(&o)
    }
}

impl<'a> Mul<&'a Rational> for Rational {
    type Output = Rational;
    fn mul(self, o: &'a Rational) -> Self {
        self.mul_ref_impl(o)
    }
}

impl<'a> AddAssign<&'a Rational> for Rational {
    fn add_assign(&mut self, o: &'a Rational) {
        *self = self.add_ref(o);
    }
}

impl<'a> SubAssign<&'a Rational> for Rational {
    fn sub_assign(&mut self, o: &'a Rational) {
        *self = self.add_ref(&-o.clone());
    }
}

impl Scalar for Rational {
    fn from_int(v: i64) -> Self {
        Rational::from_i128(v as i128, 1)
    }

    fn try_inv(&self) -> Option<Self> {
        self.recip()
    }

    fn weight(&self) -> usize {
        match &self.0 {
            Repr::Small(n, d) => (128 - n.unsigned_abs().leading_zeros() - d.unsigned_abs().leading_zeros()) as usize,
            Repr::Big(b) => (b.numer().bits() + b.denom().bits()) as usize,
        }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        self.mul_ref_impl(o)
    }

    fn to_coeff(&self) -> CoeffElem {
        CoeffElem::Rational(self.to_big())
    }

    fn from_coeff(c: &CoeffElem) -> Option<Self> {
        BigRational::from_coeff(c).map(Rational::from_big)
    }
}

impl Rational {
    pub fn abs(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(n.abs(), *d)),
            Repr::Big(b) => Rational::from_big(b.abs()),
        }
    }
}
