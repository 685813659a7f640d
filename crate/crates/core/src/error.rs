use thiserror::Error;

/// Errors raised by the symbolic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pole at constant argument: {0}")]
    Pole(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported root datum: {0}")]
    UnsupportedDatum(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("invalid parity: {0}")]
    InvalidParity(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("series expansion needs a unit constant term in the denominator")]
    NonUnitConstant,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
