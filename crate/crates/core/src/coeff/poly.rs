use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::ratfunc::RatFunc;
use super::CoeffElem;
use super::scalar::{fmt_rational, Scalar};

/// Maximum number of `Q` parameters.
pub const MAX_Q: usize = 7;

/// Exponent vector: slot 0 is the exponent of `q` (any sign), slots `1..=7` are the
/// exponents of `Q1..Q7`.
pub type Mono = [i16; MAX_Q + 1];

/// Sparse polynomial over ℚ, Laurent in `q` and polynomial in `Q1..Q7`.
///
/// Terms are kept sorted by exponent vector with no zero coefficients, so structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Mono, BigRational)>,
}

const ONE_MONO: Mono = [0; MAX_Q + 1];

impl MultiPoly {
    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            MultiPoly::default()
        } else {
            MultiPoly { terms: vec![(ONE_MONO, c)] }
        }
    }

    pub fn monomial(c: BigRational, mono: Mono) -> Self {
        if c.is_zero() {
            MultiPoly::default()
        } else {
            MultiPoly { terms: vec![(mono, c)] }
        }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: i16) -> Self {
        let mut m = ONE_MONO;
        m[0] = e;
        Self::monomial(BigRational::one(), m)
    }

    /// The parameter `Q_i`, `1 ≤ i ≤ 7`.
    pub fn big_q(i: usize) -> Self {
        assert!((1..=MAX_Q).contains(&i), "Q index out of range");
        let mut m = ONE_MONO;
        m[i] = 1;
        Self::monomial(BigRational::one(), m)
    }

    pub fn terms(&self) -> &[(Mono, BigRational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn from_terms(mut terms: Vec<(Mono, BigRational)>) -> Self {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Mono, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MultiPoly { terms: out }
    }

    /// Highest index `i` with `Q_i` occurring.
    pub fn max_q_index(&self) -> usize {
        self.terms
            .iter()
            .flat_map(|(m, _)| (1..=MAX_Q).filter(move |&i| m[i] != 0))
            .max()
            .unwrap_or(0)
    }

    pub fn q_range(&self) -> Option<(i16, i16)> {
        let lo = self.terms.iter().map(|(m, _)| m[0]).min()?;
        let hi = self.terms.iter().map(|(m, _)| m[0]).max()?;
        Some((lo, hi))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == ONE_MONO)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if *m == ONE_MONO => Some(c.clone()),
            _ => None,
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift_q(&self, e: i16) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (shift(m, e), c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MultiPoly::default();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = out * self;
        }
        out
    }

    /// Positive rational `c` with `self / c` having coprime integer coefficients, and
    /// leading coefficient (in the printing order) positive after division.
    pub fn content(&self) -> BigRational {
        let Some((_, lead)) = self.terms.last() else { return BigRational::one() };
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let g = BigRational::new(num, den);
        if lead.is_negative() {
            -g
        } else {
            g
        }
    }

    /// `self` divided by its content.
    pub fn primitive(&self) -> Self {
        if self.terms.is_empty() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Evaluates at `q ↦ q`, `Q_i ↦ big_q[i-1]` in any scalar ring with `q` invertible.
    pub fn eval<S: Scalar>(&self, q: &S, q_inv: &S, big_q: &[S], from_rat: &dyn Fn(&BigRational) -> S) -> S {
        let mut cache_pos: Vec<S> = vec![S::one()];
        let mut cache_neg: Vec<S> = vec![S::one()];
        let mut out = S::zero();
        for (m, c) in &self.terms {
            let mut t = from_rat(c);
            let e = m[0];
            if e >= 0 {
                while cache_pos.len() <= e as usize {
                    let next = cache_pos.last().unwrap().clone() * q;
                    cache_pos.push(next);
                }
                t = t * &cache_pos[e as usize];
            } else {
                let e = (-e) as usize;
                while cache_neg.len() <= e {
                    let next = cache_neg.last().unwrap().clone() * q_inv;
                    cache_neg.push(next);
                }
                t = t * &cache_neg[e];
            }
            for i in 1..=MAX_Q {
                for _ in 0..m[i] {
                    t = t * &big_q[i - 1];
                }
            }
            out += &t;
        }
        out
    }

    /// Exact quotient `self / d` in the Laurent polynomial ring, if it exists.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let inv = dc.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let mut out = *m;
                out[0] -= dm[0];
                for i in 1..=MAX_Q {
                    out[i] -= dm[i];
                    if out[i] < 0 {
                        return None;
                    }
                }
                terms.push((out, c * &inv));
            }
            return Some(MultiPoly { terms });
        }
        let (nlo, nhi) = self.q_range()?;
        let (dlo, dhi) = d.q_range()?;
        let (qlo, qhi) = (nlo - dlo, nhi - dhi);
        if qlo > qhi {
            return None;
        }
        // graded order with Q exponents dominating q; q is bounded by the range check
        let key = |m: &Mono| {
            let mut k = [0i32; MAX_Q + 2];
            k[0] = (1..=MAX_Q).map(|i| m[i] as i32).sum();
            for i in 1..=MAX_Q {
                k[i] = m[i] as i32;
            }
            k[MAX_Q + 1] = m[0] as i32;
            k
        };
        let lead = |p: &FxHashMap<Mono, BigRational>| p.iter().max_by(|a, b| key(a.0).cmp(&key(b.0))).map(|(m, c)| (*m, c.clone()));
        let (dm, dc) = d.terms.iter().max_by(|a, b| key(&a.0).cmp(&key(&b.0))).map(|(m, c)| (*m, c.clone()))?;
        let dinv = dc.recip();
        let mut rem: FxHashMap<Mono, BigRational> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        let budget = 64 * (self.terms.len() + 8) * (d.terms.len() + 8);
        for _ in 0..budget {
            let Some((rm, rc)) = lead(&rem) else {
                return Some(MultiPoly::from_terms(quot));
            };
            let mut qm = rm;
            qm[0] -= dm[0];
            for i in 1..=MAX_Q {
                qm[i] -= dm[i];
                if qm[i] < 0 {
                    return None;
                }
            }
            if qm[0] < qlo || qm[0] > qhi {
                return None;
            }
            let qc = rc * &dinv;
            for (m, c) in &d.terms {
                let t = mono_mul(m, &qm);
                let v = rem.entry(t).or_insert_with(BigRational::zero);
                *v -= c * &qc;
                if v.is_zero() {
                    rem.remove(&t);
                }
            }
            quot.push((qm, qc));
        }
        None
    }
}

fn shift(m: &Mono, e: i16) -> Mono {
    let mut out = *m;
    out[0] += e;
    out
}

#[inline]
fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = *a;
    for i in 0..=MAX_Q {
        out[i] += b[i];
    }
    out
}

fn merge(a: &[(Mono, BigRational)], b: &[(Mono, BigRational)], negate_b: bool) -> Vec<(Mono, BigRational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -b[j].1.clone() } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(BigRational::one())
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<'a> AddAssign<&'a MultiPoly> for MultiPoly {
    fn add_assign(&mut self, o: &'a MultiPoly) {
        if o.terms.is_empty() {
            return;
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            match self.terms.binary_search_by(|t| t.0.cmp(m)) {
                Ok(pos) => {
                    self.terms[pos].1 += c;
                    if self.terms[pos].1.is_zero() {
                        self.terms.remove(pos);
                    }
                }
                Err(pos) => self.terms.insert(pos, (*m, c.clone())),
            }
            return;
        }
        self.terms = merge(&self.terms, &o.terms, false);
    }
}

impl<'a> SubAssign<&'a MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, o: &'a MultiPoly) {
        self.terms = merge(&self.terms, &o.terms, true);
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, o: MultiPoly) -> MultiPoly {
        self += &o;
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, o: MultiPoly) -> MultiPoly {
        self -= &o;
        self
    }
}

impl<'a> Mul<&'a MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &'a MultiPoly) -> MultiPoly {
        if self.terms.is_empty() || o.terms.is_empty() {
            return MultiPoly::zero();
        }
        if o.terms.len() == 1 && o.terms[0].0 == ONE_MONO {
            return self.scale(&o.terms[0].1);
        }
        if self.terms.len() == 1 && self.terms[0].0 == ONE_MONO {
            return o.scale(&self.terms[0].1);
        }
        let mut prod = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                prod.push((mono_mul(ma, mb), ca * cb));
            }
        }
        MultiPoly::from_terms(prod)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: MultiPoly) -> MultiPoly {
        self * &o
    }
}

impl Scalar for MultiPoly {
    fn from_int(v: i64) -> Self {
        MultiPoly::constant(BigRational::from_integer(BigInt::from(v)))
    }

    fn try_inv(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(m, c)] if (1..=MAX_Q).all(|i| m[i] == 0) => {
                Some(MultiPoly::monomial(c.recip(), shift(&ONE_MONO, -m[0])))
            }
            _ => None,
        }
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.div_exact(d)
    }

    fn weight(&self) -> usize {
        self.terms.len()
    }

    fn to_coeff(&self) -> CoeffElem {
        CoeffElem::Generic(RatFunc::from_poly(self.clone()))
    }

    fn from_coeff(c: &CoeffElem) -> Option<Self> {
        match c {
            CoeffElem::Generic(x) => x.as_poly(),
            CoeffElem::Rational(x) => Some(MultiPoly::constant(x.clone())),
            CoeffElem::Cyclotomic(_) => None,
        }
    }
}

fn fmt_mono(m: &Mono) -> String {
    let mut parts = Vec::new();
    if m[0] == 1 {
        parts.push("q".to_string());
    } else if m[0] != 0 {
        parts.push(format!("q^{}", m[0]));
    }
    for i in 1..=MAX_Q {
        match m[i] {
            0 => {}
            1 => parts.push(format!("Q{i}")),
            e => parts.push(format!("Q{i}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let ms = fmt_mono(m);
            match (ms.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{}", fmt_rational(&a))?,
                (false, true) => write!(f, "{ms}")?,
                (false, false) => write!(f, "{}*{ms}", fmt_rational(&a))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::scalar::rat;

    fn q() -> MultiPoly {
        MultiPoly::q()
    }

    #[test]
    fn printing_is_canonical() {
        let p = q().pow(4) * MultiPoly::big_q(1) - MultiPoly::q_pow(-1) * MultiPoly::big_q(2);
        assert_eq!(p.to_string(), "q^4*Q1 - q^-1*Q2");
        assert_eq!((q() - MultiPoly::one() + MultiPoly::one()).to_string(), "q");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!((MultiPoly::from_int(-2) * q()).to_string(), "-2*q");
    }

    #[test]
    fn exact_division() {
        let a = MultiPoly::one() + q() + q() * q();
        let b = MultiPoly::one() + q();
        let prod = a.clone() * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
        let x = MultiPoly::big_q(1) - MultiPoly::big_q(2) * q();
        let y = (x.clone() * &x).shift_q(-3);
        assert_eq!(y.div_exact(&x), Some(x.shift_q(-3)));
        assert_eq!(MultiPoly::q_pow(3).try_inv(), Some(MultiPoly::q_pow(-3)));
        assert_eq!(MultiPoly::big_q(1).try_inv(), None);
    }

    #[test]
    fn content_and_primitive() {
        let p = MultiPoly::from_int(6) * q() + MultiPoly::constant(rat(-4, 3));
        assert_eq!(p.content(), rat(2, 3));
        assert_eq!(p.primitive().to_string(), "9*q - 2");
    }
}
