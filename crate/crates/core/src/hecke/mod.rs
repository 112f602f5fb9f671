//! Normal-form arithmetic in the Ariki-Koike algebra `ℋ_{r,n}` over the basis
//! `{L^a T_w : 0 ≤ a_i < r, w ∈ 𝔖_n}`.

mod algebra;
mod build;
mod label;
mod print;

pub use algebra::{Algebra, Element};
pub use label::{Label, MAX_N, MAX_R};
pub use print::{subscript_coeff, t_name};

use crate::coeff::{Cyclotomic, Mode, MultiPoly, Rational, Scalar, Specialization};
use crate::error::{Error, Result};

impl Algebra<MultiPoly> {
    /// The generic algebra over Laurent polynomials in `q` and polynomials in `Q_1..Q_r`.
    pub fn generic(r: usize, n: usize) -> Result<Self> {
        if r > crate::coeff::MAX_Q {
            return Err(Error::InvalidInput(format!("at most {} Q parameters are supported", crate::coeff::MAX_Q)));
        }
        let big_q = (1..=r).map(MultiPoly::big_q).collect();
        Algebra::with_params(n, MultiPoly::q(), big_q, Mode::Generic)
    }
}

impl Algebra<Rational> {
    pub fn rational(n: usize, spec: &Specialization) -> Result<Self> {
        let (q, _, big_q) =
            spec.rational_params().ok_or_else(|| Error::InvalidMode(format!("{} is not a rational specialization", spec.mode_name())))?;
        Algebra::with_params(n, q.into(), big_q.into_iter().map(Rational::from).collect(), Mode::Rational)
    }
}

impl Algebra<Cyclotomic> {
    pub fn cyclotomic(n: usize, spec: &Specialization) -> Result<Self> {
        let (q, _, big_q) = spec
            .cyclotomic_params()
            .ok_or_else(|| Error::InvalidMode(format!("{} is not a cyclotomic specialization", spec.mode_name())))?;
        let e = spec.e().unwrap_or(0);
        Algebra::with_params(n, q, big_q, Mode::Cyclotomic(e))
    }
}

/// Evaluates generic coefficients at a specialization, term by term.
pub fn specialize_element<S: Scalar>(
    target: &Algebra<S>,
    x: &Element<MultiPoly>,
    spec: &Specialization,
) -> Result<Element<S>> {
    let mut terms = Vec::with_capacity(x.len());
    for (k, c) in x.terms() {
        let v = spec.apply_poly(c)?;
        let v = S::from_coeff(&v).ok_or_else(|| Error::InvalidMode("specialization does not match the algebra".into()))?;
        terms.push((*k, v));
    }
    target.from_terms(terms)
}
