use thiserror::Error;

use crate::literal::ParseError;
use crate::scalar::RankMode;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("floating-point overflow")]
    Overflow,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("element is not invertible (zero or zero divisor)")]
    NotInvertible,

    #[error("policy mode {policy:?} does not match scalar backend {backend:?}")]
    PolicyMismatch { policy: RankMode, backend: RankMode },

    #[error("a-priori classification requires a nonzero right-hand side")]
    ZeroRightHandSide,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn dims(expected: impl Into<String>, found: impl Into<String>) -> Self {
        Error::DimensionMismatch {
            expected: expected.into(),
            found: found.into(),
        }
    }
}
