use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("coefficient mode mismatch: {0}")]
    InvalidMode(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("specialization failed: {0}")]
    Specialization(String),
    #[error("element does not lie in the permutation module M^{0}")]
    NotInModule(String),
    #[error("no semistandard tableaux of shape {nu} and type {lambda}")]
    NoCandidates { lambda: String, nu: String },
    #[error("ideal closure did not stabilise within {0} iterations")]
    NonConvergence(usize),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
