pub mod coeff;
pub mod cells;
pub mod combinatorics;
pub mod error;
pub mod hecke;
pub mod homsolver;

pub use error::{Error, Result};

pub type GenericAlgebra = hecke::Algebra<coeff::MultiPoly>;
pub type RationalAlgebra = hecke::Algebra<coeff::Rational>;
pub type CyclotomicAlgebra = hecke::Algebra<coeff::Cyclotomic>;
