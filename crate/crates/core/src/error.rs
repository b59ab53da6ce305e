use setreal_ff::FfError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Field(#[from] FfError),
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("invalid representation: {0}")]
    Rep(String),
    #[error("representations are not comparable: {0}")]
    Mismatch(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("{0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
