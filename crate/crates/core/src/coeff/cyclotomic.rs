use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CoeffElem;
use super::scalar::{fmt_rational, Scalar};

/// The cyclotomic polynomial `Φ_e`, stored low degree first.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloModulus {
    pub e: u32,
    pub coeffs: Vec<BigInt>,
}

/// `Φ_e(x)` with integer coefficients, low degree first.
pub fn cyclotomic_poly(e: u32) -> Vec<BigInt> {
    assert!(e >= 1);
    // x^e - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![BigInt::zero(); e as usize + 1];
    p[0] = BigInt::from(-1);
    p[e as usize] = BigInt::one();
    for d in 1..e {
        if e % d == 0 {
            p = div_monic_int(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn div_monic_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

impl CycloModulus {
    pub fn new(e: u32) -> Arc<Self> {
        Arc::new(CycloModulus { e, coeffs: cyclotomic_poly(e) })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Element of ℚ[x]/Φ_e(x), with `x` playing the role of `q`.
///
/// Rational constants carry no modulus, so `zero()` and `one()` combine with any `e`.
/// Combining elements of different moduli panics with a mode error message;
/// [`crate::coeff::CoeffElem`] checks modes before reaching this point.
#[derive(Clone)]
pub struct Cyclotomic {
    c: Vec<BigRational>,
    m: Option<Arc<CycloModulus>>,
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn reduce(mut v: Vec<BigRational>, m: &CycloModulus) -> Vec<BigRational> {
    let d = m.degree();
    while v.len() > d {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = v.len() - d;
        for j in 0..d {
            v[k + j] -= BigRational::from_integer(m.coeffs[j].clone()) * &top;
        }
    }
    trim(&mut v);
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

impl Cyclotomic {
    pub fn rational(c: BigRational) -> Self {
        let mut v = vec![c];
        trim(&mut v);
        Cyclotomic { c: v, m: None }
    }

    /// The class of `x`, i.e. a primitive `e`-th root of unity.
    pub fn generator(m: &Arc<CycloModulus>) -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()], m)
    }

    /// Class of `Σ c_i x^i`.
    pub fn from_coeffs(c: Vec<BigRational>, m: &Arc<CycloModulus>) -> Self {
        let v = reduce(c, m);
        Cyclotomic { c: v, m: Some(m.clone()) }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn modulus(&self) -> Option<&Arc<CycloModulus>> {
        self.m.as_ref()
    }

    pub fn e(&self) -> Option<u32> {
        self.m.as_ref().map(|m| m.e)
    }

    /// Whether two elements may be combined.
    pub fn compatible(&self, o: &Cyclotomic) -> bool {
        match (&self.m, &o.m) {
            (Some(a), Some(b)) => a.e == b.e,
            _ => true,
        }
    }

    fn join(&self, o: &Cyclotomic) -> Option<Arc<CycloModulus>> {
        match (&self.m, &o.m) {
            (Some(a), Some(b)) => {
                assert!(a.e == b.e, "coefficient mode mismatch: e = {} vs e = {}", a.e, b.e);
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn build(c: Vec<BigRational>, m: Option<Arc<CycloModulus>>) -> Self {
        match m {
            Some(m) => {
                let v = reduce(c, &m);
                Cyclotomic { c: v, m: Some(m) }
            }
            None => {
                let mut v = c;
                trim(&mut v);
                Cyclotomic { c: v, m: None }
            }
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, o: &Self) -> bool {
        self.c == o.c && (self.c.len() <= 1 || self.compatible(o))
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic { c: Vec::new(), m: None }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::rational(BigRational::one())
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { c: self.c.into_iter().map(|x| -x).collect(), m: self.m }
    }
}

impl<'a> AddAssign<&'a Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, o: &'a Cyclotomic) {
        let m = self.join(o);
        if self.c.len() < o.c.len() {
            self.c.resize(o.c.len(), BigRational::zero());
        }
        for (i, y) in o.c.iter().enumerate() {
            self.c[i] += y;
        }
        trim(&mut self.c);
        self.m = m;
    }
}

impl<'a> SubAssign<&'a Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, o: &'a Cyclotomic) {
        let m = self.join(o);
        self.c = poly_sub(&self.c, &o.c);
        self.m = m;
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(mut self, o: Cyclotomic) -> Cyclotomic {
        self += &o;
        self
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(mut self, o: Cyclotomic) -> Cyclotomic {
        self -= &o;
        self
    }
}

impl<'a> Mul<&'a Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &'a Cyclotomic) -> Cyclotomic {
        let m = self.join(o);
        Cyclotomic::build(poly_mul(&self.c, &o.c), m)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: Cyclotomic) -> Cyclotomic {
        self * &o
    }
}

impl Scalar for Cyclotomic {
    fn from_int(v: i64) -> Self {
        Cyclotomic::rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn try_inv(&self) -> Option<Self> {
        if self.c.is_empty() {
            return None;
        }
        if self.c.len() == 1 {
            return Some(Cyclotomic { c: vec![self.c[0].recip()], m: self.m.clone() });
        }
        let m = self.m.as_ref()?;
        let modp: Vec<BigRational> = m.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        // extended Euclid: s·a ≡ g (mod Φ_e) with g a nonzero constant
        let (mut r0, mut r1) = (modp, self.c.clone());
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (quo, rem) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quo, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r1.is_empty() {
            return None;
        }
        let g = r1[0].recip();
        let s: Vec<BigRational> = s1.into_iter().map(|x| x * &g).collect();
        Some(Cyclotomic::from_coeffs(s, m))
    }

    fn is_unit(&self) -> bool {
        !self.c.is_empty()
    }

    fn weight(&self) -> usize {
        self.c.len()
    }

    fn to_coeff(&self) -> CoeffElem {
        CoeffElem::Cyclotomic(self.clone())
    }

    fn from_coeff(c: &CoeffElem) -> Option<Self> {
        match c {
            CoeffElem::Cyclotomic(x) => Some(x.clone()),
            CoeffElem::Rational(x) => Some(Cyclotomic::rational(x.clone())),
            CoeffElem::Generic(_) => None,
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{}", fmt_rational(&a))?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{}*{mono}", fmt_rational(&a))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.e() {
            Some(e) => write!(f, "{self} (mod Φ_{e})"),
            None => write!(f, "{self}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        let to_i = |v: Vec<BigInt>| v.into_iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(to_i(cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(to_i(cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(to_i(cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(to_i(cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(to_i(cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn arithmetic_mod_phi3() {
        let m = CycloModulus::new(3);
        let q = Cyclotomic::generator(&m);
        let s = Cyclotomic::one() + q.clone() + q.clone() * &q;
        assert!(s.is_zero());
        let inv = q.try_inv().unwrap();
        assert_eq!(inv.clone() * &q, Cyclotomic::one());
        // q^-1 = q^2 = -1 - q
        assert_eq!(inv.to_string(), "-q - 1");
        let a = Cyclotomic::from_int(2) + q.clone();
        assert_eq!(a.try_inv().unwrap() * &a, Cyclotomic::one());
    }

    #[test]
    fn constants_are_mode_agnostic() {
        let m5 = CycloModulus::new(5);
        let q5 = Cyclotomic::generator(&m5);
        let x = q5.clone() + Cyclotomic::one();
        assert_eq!(x.e(), Some(5));
        let m3 = CycloModulus::new(3);
        assert!(!Cyclotomic::generator(&m3).compatible(&q5));
        assert!(Cyclotomic::one().compatible(&q5));
    }
}
