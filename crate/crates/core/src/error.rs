use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("basis is linearly dependent or ill conditioned (condition number {condition:e})")]
    IllConditioned { condition: f64 },

    #[error("operation is undefined for the zero subspace")]
    ZeroSubspace,

    #[error("ambient dimension {dim} exceeds the exterior-algebra cap {cap}")]
    CapExceeded { dim: usize, cap: usize },

    #[error("operation requires a {expected} field")]
    WrongField { expected: crate::Field },

    #[error("invalid tolerance configuration: {0}")]
    InvalidTolerance(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid document field `{field}`: {message}")]
    InvalidDocument { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
