//! Exact coefficient rings: Laurent polynomials and rational functions in `q, Q1..Qr`,
//! rational numbers and cyclotomic fields, together with parsing, specialization and
//! exact linear algebra.

mod cyclotomic;
pub mod linalg;
mod parse;
mod poly;
mod ratfunc;
mod rational;
mod scalar;
mod specialize;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;

pub use cyclotomic::{cyclotomic_poly, CycloModulus, Cyclotomic};
pub use parse::{parse_poly, parse_poly_list, parse_rational, parse_ratfunc, split_list};
pub use poly::{Mono, MultiPoly, MAX_Q};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use scalar::{rat, Scalar};
pub use specialize::Specialization;

pub(crate) use scalar::fmt_rational;

use crate::error::{Error, Result};

/// Which coefficient ring a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Generic,
    Rational,
    Cyclotomic(u32),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Generic => write!(f, "generic"),
            Mode::Rational => write!(f, "rational"),
            Mode::Cyclotomic(e) => write!(f, "cyclotomic(e={e})"),
        }
    }
}

/// A coefficient tagged with its ring. Binary operations between different rings fail
/// with [`Error::InvalidMode`].
#[derive(Clone, Debug)]
pub enum CoeffElem {
    Generic(RatFunc),
    Rational(BigRational),
    Cyclotomic(Cyclotomic),
}

impl CoeffElem {
    pub fn mode(&self) -> Mode {
        match self {
            CoeffElem::Generic(_) => Mode::Generic,
            CoeffElem::Rational(_) => Mode::Rational,
            CoeffElem::Cyclotomic(c) => c.e().map_or(Mode::Rational, Mode::Cyclotomic),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            CoeffElem::Generic(x) => x.is_zero(),
            CoeffElem::Rational(x) => x.is_zero(),
            CoeffElem::Cyclotomic(x) => x.is_zero(),
        }
    }

    fn mismatch(&self, o: &CoeffElem) -> Error {
        Error::InvalidMode(format!("cannot combine a {} coefficient with a {} coefficient", self.mode(), o.mode()))
    }

    fn binary(
        &self,
        o: &CoeffElem,
        g: impl FnOnce(&RatFunc, &RatFunc) -> RatFunc,
        r: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        c: impl FnOnce(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    ) -> Result<CoeffElem> {
        match (self, o) {
            (CoeffElem::Generic(a), CoeffElem::Generic(b)) => Ok(CoeffElem::Generic(g(a, b))),
            (CoeffElem::Rational(a), CoeffElem::Rational(b)) => Ok(CoeffElem::Rational(r(a, b))),
            (CoeffElem::Cyclotomic(a), CoeffElem::Cyclotomic(b)) if a.compatible(b) => Ok(CoeffElem::Cyclotomic(c(a, b))),
            _ => Err(self.mismatch(o)),
        }
    }

    pub fn try_add(&self, o: &CoeffElem) -> Result<CoeffElem> {
        self.binary(o, |a, b| a.clone() + b.clone(), |a, b| a + b, |a, b| a.clone() + b.clone())
    }

    pub fn try_sub(&self, o: &CoeffElem) -> Result<CoeffElem> {
        self.binary(o, |a, b| a.clone() - b.clone(), |a, b| a - b, |a, b| a.clone() - b.clone())
    }

    pub fn try_mul(&self, o: &CoeffElem) -> Result<CoeffElem> {
        self.binary(o, |a, b| a.clone() * b, |a, b| a * b, |a, b| a.clone() * b)
    }

    pub fn try_div(&self, o: &CoeffElem) -> Result<CoeffElem> {
        if o.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        let inv = o.try_inv()?;
        self.try_mul(&inv)
    }

    pub fn try_inv(&self) -> Result<CoeffElem> {
        let out = match self {
            CoeffElem::Generic(a) => a.try_inv().map(CoeffElem::Generic),
            CoeffElem::Rational(a) => a.try_inv().map(CoeffElem::Rational),
            CoeffElem::Cyclotomic(a) => a.try_inv().map(CoeffElem::Cyclotomic),
        };
        out.ok_or_else(|| Error::Arithmetic("division by zero".into()))
    }

    pub fn neg(&self) -> CoeffElem {
        match self {
            CoeffElem::Generic(a) => CoeffElem::Generic(-a.clone()),
            CoeffElem::Rational(a) => CoeffElem::Rational(-a.clone()),
            CoeffElem::Cyclotomic(a) => CoeffElem::Cyclotomic(-a.clone()),
        }
    }

    pub fn try_eq(&self, o: &CoeffElem) -> Result<bool> {
        match (self, o) {
            (CoeffElem::Generic(a), CoeffElem::Generic(b)) => Ok(a == b),
            (CoeffElem::Rational(a), CoeffElem::Rational(b)) => Ok(a == b),
            (CoeffElem::Cyclotomic(a), CoeffElem::Cyclotomic(b)) if a.compatible(b) => Ok(a == b),
            _ => Err(self.mismatch(o)),
        }
    }

    /// JSON term list `[[coeff, e_q, e_Q1, ..., e_Qr], ...]`. A generic value with a
    /// nontrivial denominator becomes `{"num": [...], "den": [...]}`.
    pub fn to_json(&self, r: usize) -> Value {
        match self {
            CoeffElem::Generic(x) if x.den().is_one() => poly_to_json(x.num(), r),
            CoeffElem::Generic(x) => serde_json::json!({ "num": poly_to_json(x.num(), r), "den": poly_to_json(x.den(), r) }),
            CoeffElem::Rational(c) => poly_to_json(&MultiPoly::constant(c.clone()), r),
            CoeffElem::Cyclotomic(c) => poly_to_json(&cyclotomic_as_poly(c), r),
        }
    }
}

impl fmt::Display for CoeffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffElem::Generic(x) => write!(f, "{x}"),
            CoeffElem::Rational(x) => write!(f, "{}", fmt_rational(x)),
            CoeffElem::Cyclotomic(x) => write!(f, "{x}"),
        }
    }
}

/// The canonical representative `Σ c_i q^i` (degree below φ(e)) of a cyclotomic value.
pub fn cyclotomic_as_poly(c: &Cyclotomic) -> MultiPoly {
    let terms = c
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| {
            let mut m: Mono = [0; MAX_Q + 1];
            m[0] = i as i16;
            (m, v.clone())
        })
        .collect();
    MultiPoly::from_terms(terms)
}

fn rational_to_json(c: &BigRational) -> Value {
    if c.is_integer() {
        if let Some(v) = c.numer().to_i64() {
            return Value::from(v);
        }
    }
    Value::from(fmt_rational(c))
}

fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| BigRational::from_integer(BigInt::from(x)))
            .ok_or_else(|| Error::InvalidInput(format!("coefficient {n} is not an integer"))),
        Value::String(s) => parse_rational(s),
        other => Err(Error::InvalidInput(format!("bad coefficient {other}"))),
    }
}

/// Serializes a Laurent polynomial as `[[coeff, e_q, e_Q1..e_Qr], ...]`.
pub fn poly_to_json(p: &MultiPoly, r: usize) -> Value {
    let rows: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut row = vec![rational_to_json(c)];
            row.extend(m.iter().take(r + 1).map(|&e| Value::from(e)));
            Value::Array(row)
        })
        .collect();
    Value::Array(rows)
}

/// Inverse of [`poly_to_json`].
pub fn poly_from_json(v: &Value) -> Result<MultiPoly> {
    let rows = v.as_array().ok_or_else(|| Error::InvalidInput("expected a term list".into()))?;
    let mut terms = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().ok_or_else(|| Error::InvalidInput("expected a term".into()))?;
        if row.is_empty() || row.len() > MAX_Q + 2 {
            return Err(Error::InvalidInput("term has the wrong length".into()));
        }
        let c = rational_from_json(&row[0])?;
        let mut m: Mono = [0; MAX_Q + 1];
        for (slot, e) in m.iter_mut().zip(&row[1..]) {
            let e = e.as_i64().ok_or_else(|| Error::InvalidInput("exponent must be an integer".into()))?;
            *slot = i16::try_from(e).map_err(|_| Error::InvalidInput("exponent out of range".into()))?;
        }
        if m[1..].iter().any(|&e| e < 0) {
            return Err(Error::InvalidInput("Q exponents must be nonnegative".into()));
        }
        terms.push((m, c));
    }
    Ok(MultiPoly::from_terms(terms))
}

/// Reads a coefficient in the given mode from its JSON form.
pub fn coeff_from_json(v: &Value, spec: Option<&Specialization>) -> Result<CoeffElem> {
    let generic = match v {
        Value::Object(o) => {
            let num = poly_from_json(o.get("num").ok_or_else(|| Error::InvalidInput("missing num".into()))?)?;
            let den = poly_from_json(o.get("den").ok_or_else(|| Error::InvalidInput("missing den".into()))?)?;
            RatFunc::try_new(num, den).ok_or_else(|| Error::Arithmetic("zero denominator".into()))?
        }
        _ => RatFunc::from_poly(poly_from_json(v)?),
    };
    match spec {
        None => Ok(CoeffElem::Generic(generic)),
        Some(s) => s.apply(&generic),
    }
}
