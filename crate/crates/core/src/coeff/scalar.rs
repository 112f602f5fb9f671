use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::CoeffElem;

/// Exact coefficient ring used by the algebra and the linear algebra routines.
///
/// Only ring operations are needed for normal-form arithmetic. Elimination additionally
/// relies on [`Scalar::try_inv`] and [`Scalar::exact_div`].
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self;

    /// Multiplicative inverse when it exists in this ring.
    fn try_inv(&self) -> Option<Self>;

    /// `self / d` when the quotient exists in this ring.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        d.try_inv().map(|inv| self.clone() * &inv)
    }

    /// Whether `self` is a unit whose inverse is cheap to use as a pivot.
    fn is_unit(&self) -> bool {
        self.try_inv().is_some()
    }

    /// A size measure used to pick small pivots.
    fn weight(&self) -> usize {
        1
    }

    fn mul_ref(&self, o: &Self) -> Self {
        self.clone() * o
    }

    /// The value tagged with its coefficient mode.
    fn to_coeff(&self) -> CoeffElem;

    /// Inverse of [`Scalar::to_coeff`] when the mode matches.
    fn from_coeff(c: &CoeffElem) -> Option<Self>;
}

impl Scalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(self / d)
        }
    }

    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }

    fn to_coeff(&self) -> CoeffElem {
        CoeffElem::Rational(self.clone())
    }

    fn from_coeff(c: &CoeffElem) -> Option<Self> {
        match c {
            CoeffElem::Rational(x) => Some(x.clone()),
            CoeffElem::Generic(x) => x.as_poly().and_then(|p| p.constant_value()),
            CoeffElem::Cyclotomic(x) if x.coeffs().len() <= 1 => {
                Some(x.coeffs().first().cloned().unwrap_or_else(BigRational::zero))
            }
            CoeffElem::Cyclotomic(_) => None,
        }
    }
}

/// Small helper for building rationals in tests and parsers.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}
