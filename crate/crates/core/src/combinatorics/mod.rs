//! Multipartitions, tableaux and the shape moves attached to the generator families.

mod composition;
mod perm;
mod tableau;
mod typed;

pub use composition::{dominates, mc, Multicomposition, Multipartition, Node};
pub use perm::Permutation;
pub use tableau::Tableau;
pub use typed::{entry_cmp, Entry, TypedTableau};

pub(crate) use typed::combinations;

/// `enumerate_standard(λ)`.
pub fn enumerate_standard(lambda: &Multipartition) -> Vec<Tableau> {
    Tableau::enumerate_standard(lambda)
}

/// `enumerate_semistandard(μ, λ)`: the set `𝒯₀(μ, λ)`.
pub fn enumerate_semistandard(mu: &Multipartition, lambda: &Multicomposition) -> Vec<TypedTableau> {
    TypedTableau::enumerate_semistandard(mu, lambda)
}
