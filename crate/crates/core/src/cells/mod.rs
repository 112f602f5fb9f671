//! The permutation module `M^ν = m_ν ℋ`, its basis `{m_{𝚂𝔱}}`, and the Specht module
//! `S^ν` in the coordinates of its standard basis `{Ȟ^ν + m_{𝔱^ν𝔱}}`.

mod vector;

use std::sync::OnceLock;

use rustc_hash::FxHashMap;

pub use vector::SpechtVector;

use crate::coeff::linalg::SparseEchelon;
use crate::coeff::{CoeffElem, Scalar};
use crate::combinatorics::{Multicomposition, Multipartition, Tableau, TypedTableau};
use crate::error::{invalid, Error, Result};
use crate::hecke::{Algebra, Element, Label};

/// An index `(μ, 𝚂, 𝔱)` of the basis `{m_{𝚂𝔱}}` of `M^λ`: `𝚂` is a semistandard
/// `μ`-tableau of type `λ` and `𝔱` a standard `μ`-tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MBasisIndex {
    pub mu: Multipartition,
    pub big_s: TypedTableau,
    pub t: Tableau,
}

/// Every index `(μ, 𝚂, 𝔱)` with `μ ⊵ λ`, or `μ ⊳ λ` when `strict` holds, in a fixed order.
pub fn m_basis_indices(lambda: &Multipartition, strict: bool) -> Vec<MBasisIndex> {
    let mut out = Vec::new();
    for mu in Multicomposition::multipartitions(lambda.size(), lambda.r()) {
        let ok = if strict { lambda.is_strictly_dominated_by(&mu) } else { lambda.is_dominated_by(&mu) };
        if !ok {
            continue;
        }
        let std = Tableau::enumerate_standard(&mu);
        for big_s in TypedTableau::enumerate_semistandard(&mu, lambda) {
            for t in &std {
                out.push(MBasisIndex { mu: mu.clone(), big_s: big_s.clone(), t: t.clone() });
            }
        }
    }
    out
}

/// The basis `{m_{𝚂𝔱} : μ ⊵ λ}` of `M^λ`, expanded.
pub fn m_module_basis<S: Scalar>(alg: &Algebra<S>, lambda: &Multipartition) -> Result<Vec<(MBasisIndex, Element<S>)>> {
    basis_elements(alg, lambda, false)
}

/// The basis `{m_{𝚂𝔱} : μ ⊳ λ}` of `M^λ ∩ Ȟ^λ`, expanded.
pub fn intersection_basis<S: Scalar>(alg: &Algebra<S>, lambda: &Multipartition) -> Result<Vec<(MBasisIndex, Element<S>)>> {
    basis_elements(alg, lambda, true)
}

fn basis_elements<S: Scalar>(alg: &Algebra<S>, lambda: &Multipartition, strict: bool) -> Result<Vec<(MBasisIndex, Element<S>)>> {
    if !lambda.is_multipartition() {
        return invalid(format!("{lambda} is not a multipartition"));
    }
    m_basis_indices(lambda, strict)
        .into_iter()
        .map(|ix| {
            let e = alg.m_stab(&ix.big_s, &ix.t)?;
            Ok((ix, e))
        })
        .collect()
}

pub(crate) fn element_vector<S: Scalar>(x: &Element<S>) -> impl Iterator<Item = (Label, S)> + '_ {
    x.terms().map(|(k, c)| (*k, c.clone()))
}

/// `S^ν` together with a factorization of its ambient `M^ν` basis, built once and reused
/// by every reduction.
pub struct SpechtModule<'a, S: Scalar> {
    alg: &'a Algebra<S>,
    nu: Multipartition,
    std: Vec<Tableau>,
    pos: FxHashMap<Tableau, usize>,
    indices: Vec<MBasisIndex>,
    /// input number → position in `std` for the `μ = ν` block
    block: Vec<Option<usize>>,
    echelon: SparseEchelon<Label, S>,
    gens: OnceLock<Vec<Vec<Vec<CoeffElem>>>>,
}

impl<'a, S: Scalar> SpechtModule<'a, S> {
    pub fn new(alg: &'a Algebra<S>, nu: &Multipartition) -> Result<Self> {
        if nu.size() != alg.n() || nu.r() != alg.r() {
            return invalid(format!("{nu} is not a multipartition of {} with {} components", alg.n(), alg.r()));
        }
        let std = Tableau::enumerate_standard(nu);
        let pos: FxHashMap<Tableau, usize> = std.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let mut echelon = SparseEchelon::new(true);
        let mut indices = Vec::new();
        let mut block = Vec::new();
        for (ix, e) in m_module_basis(alg, nu)? {
            let grew = echelon.insert(element_vector(&e));
            debug_assert!(grew, "the m_St basis is linearly independent");
            block.push(if &ix.mu == nu { Some(pos[&ix.t]) } else { None });
            indices.push(ix);
        }
        Ok(SpechtModule { alg, nu: nu.clone(), std, pos, indices, block, echelon, gens: OnceLock::new() })
    }

    pub fn algebra(&self) -> &'a Algebra<S> {
        self.alg
    }

    pub fn shape(&self) -> &Multipartition {
        &self.nu
    }

    pub fn dim(&self) -> usize {
        self.std.len()
    }

    /// `dim M^ν`.
    pub fn ambient_dim(&self) -> usize {
        self.indices.len()
    }

    pub fn ambient_rank(&self) -> usize {
        self.echelon.rank()
    }

    /// `Std(ν)` in the order used for coordinates.
    pub fn standard(&self) -> &[Tableau] {
        &self.std
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.pos.get(t).copied()
    }

    pub fn indices(&self) -> &[MBasisIndex] {
        &self.indices
    }

    /// `m_{𝔱^ν𝔱}`, the lift of the basis vector at `𝔱`.
    pub fn lift_basis(&self, t: &Tableau) -> Result<Element<S>> {
        self.alg.m_st(&Tableau::initial(&self.nu), t)
    }

    /// Coordinates of `x ∈ M^ν` in the whole basis `{m_{𝚂𝔱}}` as `(scale, c)` with
    /// `scale·x = Σ c_i m_i`.
    pub fn expand(&self, x: &Element<S>) -> Result<(S, Vec<S>)> {
        self.alg.check(x)?;
        let e = self
            .echelon
            .express(element_vector(x))
            .ok_or_else(|| Error::NotInModule(self.nu.to_string()))?;
        let mut c = vec![S::zero(); self.indices.len()];
        for (i, v) in e.comb {
            c[i] = v;
        }
        Ok((e.scale, c))
    }

    /// Specht coordinates times a common scale: `scale·(x + Ȟ^ν) = Σ c_𝔱 m_𝔱`.
    pub(crate) fn reduce_scaled(&self, x: &Element<S>) -> Result<(S, Vec<S>)> {
        let (scale, c) = self.expand(x)?;
        let mut out = vec![S::zero(); self.std.len()];
        for (i, v) in c.into_iter().enumerate() {
            if let Some(j) = self.block[i] {
                out[j] = v;
            }
        }
        Ok((scale, out))
    }

    /// The image of `x ∈ M^ν` in `S^ν`.
    pub fn reduce(&self, x: &Element<S>) -> Result<SpechtVector> {
        let (scale, c) = self.reduce_scaled(x)?;
        let scale = scale.to_coeff();
        let coords = c.into_iter().map(|v| v.to_coeff().try_div(&scale)).collect::<Result<Vec<_>>>()?;
        SpechtVector::from_dense(&self.nu, &self.std, coords, S::zero().to_coeff())
    }

    /// Matrices of the right action of `T_0..T_{n−1}`; column `𝔱` of matrix `g` is the
    /// reduction of `m_{𝔱^ν𝔱}·T_g`.
    pub fn generator_matrices(&self) -> Result<&[Vec<Vec<CoeffElem>>]> {
        if let Some(g) = self.gens.get() {
            return Ok(g);
        }
        let lifts = self.std.iter().map(|t| self.lift_basis(t)).collect::<Result<Vec<_>>>()?;
        let mut mats = Vec::with_capacity(self.alg.n());
        for g in 0..self.alg.n() {
            let zero = S::zero().to_coeff();
            let mut m = vec![vec![zero; self.std.len()]; self.std.len()];
            for (j, x) in lifts.iter().enumerate() {
                let y = self.alg.right_mul_t(x, g);
                let v = self.reduce(&y)?;
                for (i, c) in v.dense(&self.std).into_iter().enumerate() {
                    m[i][j] = c;
                }
            }
            mats.push(m);
        }
        Ok(self.gens.get_or_init(|| mats))
    }

    /// `v·T_g`.
    pub fn act(&self, v: &SpechtVector, g: usize) -> Result<SpechtVector> {
        if v.shape() != &self.nu {
            return invalid("vector belongs to a different Specht module");
        }
        if g >= self.alg.n() {
            return Err(Error::InvalidIndex(format!("T_{g} with n = {}", self.alg.n())));
        }
        let m = &self.generator_matrices()?[g];
        let x = v.dense(&self.std);
        let mut out = Vec::with_capacity(self.std.len());
        for row in m {
            let mut acc = S::zero().to_coeff();
            for (a, b) in row.iter().zip(&x) {
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.try_add(&a.try_mul(b)?)?;
                }
            }
            out.push(acc);
        }
        SpechtVector::from_dense(&self.nu, &self.std, out, S::zero().to_coeff())
    }

    /// `Σ_{𝔱 ∈ Std(ν), λ(𝔱) = 𝚃} m_ν T_{d(𝔱)}`, the image of `m_λ` under `φ_𝚃` before
    /// reduction.
    pub fn phi_t_element(&self, big_t: &TypedTableau) -> Result<Element<S>> {
        self.check_typed(big_t)?;
        let mut x = self.alg.zero();
        for t in big_t.row_standard_preimages() {
            x = x.try_add(&self.lift_basis(&t)?)?;
        }
        Ok(x)
    }

    /// `φ_𝚃(m_λ h)`.
    pub fn phi_t(&self, big_t: &TypedTableau, h: &Element<S>) -> Result<SpechtVector> {
        let x = self.phi_t_element(big_t)?;
        self.reduce(&self.alg.mul(&x, h)?)
    }

    fn check_typed(&self, big_t: &TypedTableau) -> Result<()> {
        if big_t.shape() != &self.nu {
            return invalid(format!("tableau of shape {} used with S^{}", big_t.shape(), self.nu));
        }
        if !big_t.is_semistandard() {
            return invalid(format!("{big_t} is not semistandard"));
        }
        if !big_t.ty().is_dominated_by(&self.nu) {
            return invalid("type must be dominated by the shape");
        }
        Ok(())
    }
}

/// One-shot reduction of `x ∈ M^ν`; build a [`SpechtModule`] to reduce repeatedly.
pub fn specht_reduce<S: Scalar>(alg: &Algebra<S>, x: &Element<S>, nu: &Multipartition) -> Result<SpechtVector> {
    SpechtModule::new(alg, nu)?.reduce(x)
}
