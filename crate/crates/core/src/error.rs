use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("invalid additive map: {0}")]
    InvalidMap(String),

    #[error("doubling parameter must be nonzero")]
    ZeroMu,

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("degree bound {got} exceeds the limit {limit}")]
    BoundExceeded { got: usize, limit: usize },

    #[error("ring is not of the form A[X;*]^fl: {0}")]
    NotStarSkew(String),

    #[error("grading hypothesis sigma*delta + delta*sigma = 0 does not hold")]
    GradingViolated,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("serialization error: {0}")]
    Serde(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}
