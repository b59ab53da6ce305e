use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FfError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("invalid modulus {modulus:?}: {reason}")]
    BadModulus { modulus: Vec<u32>, reason: String },
    #[error("field of order {0} is too large for table arithmetic")]
    FieldTooLarge(u64),
    #[error("element {0} is out of range for a field of order {1}")]
    ElementOutOfRange(u32, u32),
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("no primitive {n}-th root of unity in a field of order {q}")]
    NoRootOfUnity { n: u64, q: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
}

pub type Result<T, E = FfError> = std::result::Result<T, E>;
