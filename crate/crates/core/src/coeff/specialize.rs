use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::{CycloModulus, Cyclotomic};
use super::poly::MultiPoly;
use super::ratfunc::RatFunc;
use super::scalar::Scalar;
use super::CoeffElem;
use crate::error::{invalid, Error, Result};

/// An assignment of the parameters `q, Q1..Qr` into a specialization field.
#[derive(Clone)]
pub enum Specialization {
    /// `q` and every `Q_i` are rational numbers.
    Rational { q: BigRational, big_q: Vec<BigRational> },
    /// `q` is a primitive `e`-th root of unity in ℚ[x]/Φ_e(x); every `Q_i` is a Laurent
    /// polynomial in `q` with rational coefficients.
    Cyclotomic { modulus: Arc<CycloModulus>, big_q: Vec<MultiPoly> },
}

impl Specialization {
    pub fn rational(q: BigRational, big_q: Vec<BigRational>) -> Result<Self> {
        if q.is_zero() || q.is_one() {
            return invalid(format!("q = {q} is not allowed; q must be nonzero and different from 1"));
        }
        if big_q.is_empty() {
            return invalid("at least one Q parameter is required");
        }
        Ok(Specialization::Rational { q, big_q })
    }

    pub fn cyclotomic(e: u32, big_q: Vec<MultiPoly>) -> Result<Self> {
        if e < 2 {
            return invalid("e must be at least 2, since e = 1 forces q = 1");
        }
        if big_q.is_empty() {
            return invalid("at least one Q parameter is required");
        }
        if let Some(p) = big_q.iter().find(|p| p.max_q_index() > 0) {
            return invalid(format!("cyclotomic Q values must be polynomials in q alone, got {p}"));
        }
        Ok(Specialization::Cyclotomic { modulus: CycloModulus::new(e), big_q })
    }

    pub fn r(&self) -> usize {
        match self {
            Specialization::Rational { big_q, .. } => big_q.len(),
            Specialization::Cyclotomic { big_q, .. } => big_q.len(),
        }
    }

    pub fn e(&self) -> Option<u32> {
        match self {
            Specialization::Rational { .. } => None,
            Specialization::Cyclotomic { modulus, .. } => Some(modulus.e),
        }
    }

    pub fn mode_name(&self) -> String {
        match self {
            Specialization::Rational { .. } => "rational".into(),
            Specialization::Cyclotomic { modulus, .. } => format!("cyclotomic(e={})", modulus.e),
        }
    }

    /// `(q, q^-1, [Q1..Qr])` in ℚ.
    pub fn rational_params(&self) -> Option<(BigRational, BigRational, Vec<BigRational>)> {
        match self {
            Specialization::Rational { q, big_q } => Some((q.clone(), q.recip(), big_q.clone())),
            _ => None,
        }
    }

    /// `(q, q^-1, [Q1..Qr])` in ℚ[x]/Φ_e(x).
    pub fn cyclotomic_params(&self) -> Option<(Cyclotomic, Cyclotomic, Vec<Cyclotomic>)> {
        match self {
            Specialization::Cyclotomic { modulus, big_q } => {
                let q = Cyclotomic::generator(modulus);
                let qinv = q.try_inv().expect("q is a unit modulo Φ_e");
                let vals = big_q.iter().map(|p| p.eval(&q, &qinv, &[], &|c| Cyclotomic::rational(c.clone()))).collect();
                Some((q, qinv, vals))
            }
            _ => None,
        }
    }

    fn check_r(&self, p: &MultiPoly) -> Result<()> {
        if p.max_q_index() > self.r() {
            return Err(Error::Specialization(format!("{p} involves Q{} but only {} are assigned", p.max_q_index(), self.r())));
        }
        Ok(())
    }

    pub fn eval_rational(&self, p: &MultiPoly) -> Result<BigRational> {
        self.check_r(p)?;
        let (q, qinv, vals) = self.rational_params().ok_or_else(|| Error::InvalidMode("not a rational specialization".into()))?;
        Ok(p.eval(&q, &qinv, &vals, &|c| c.clone()))
    }

    pub fn eval_cyclotomic(&self, p: &MultiPoly) -> Result<Cyclotomic> {
        self.check_r(p)?;
        let (q, qinv, vals) =
            self.cyclotomic_params().ok_or_else(|| Error::InvalidMode("not a cyclotomic specialization".into()))?;
        Ok(p.eval(&q, &qinv, &vals, &|c| Cyclotomic::rational(c.clone())))
    }

    pub fn apply_poly(&self, p: &MultiPoly) -> Result<CoeffElem> {
        match self {
            Specialization::Rational { .. } => self.eval_rational(p).map(CoeffElem::Rational),
            Specialization::Cyclotomic { .. } => self.eval_cyclotomic(p).map(CoeffElem::Cyclotomic),
        }
    }

    /// Specializes a generic element; a vanishing denominator is an error.
    pub fn apply(&self, x: &RatFunc) -> Result<CoeffElem> {
        let num = self.apply_poly(x.num())?;
        let den = self.apply_poly(x.den())?;
        if den.is_zero() {
            return Err(Error::Specialization(format!("denominator {} vanishes", x.den())));
        }
        num.try_div(&den)
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialization::Rational { q, big_q } => {
                let qs: Vec<String> = big_q.iter().map(|x| x.to_string()).collect();
                write!(f, "q = {q}, Q = [{}]", qs.join(", "))
            }
            Specialization::Cyclotomic { modulus, big_q } => {
                let qs: Vec<String> = big_q.iter().map(|x| x.to_string()).collect();
                write!(f, "e = {}, Q = [{}]", modulus.e, qs.join(", "))
            }
        }
    }
}

impl fmt::Debug for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
