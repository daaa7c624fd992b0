use thiserror::Error;

/// Errors raised by constructions and computations in this crate.
///
/// Validators never return these for mathematical failures; they produce a
/// [`crate::report::ValidationReport`] instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("unknown identifier `{0}`")]
    UnknownId(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("budget exhausted: {0}")]
    Budget(String),

    #[error("not a cochain complex: {0}")]
    NotAComplex(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("insufficient truncation: {0}")]
    InsufficientTruncation(String),

    #[error("internal invariant breach: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
