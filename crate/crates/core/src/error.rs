use thiserror::Error;

/// Errors raised by the algebraic kernels.
///
/// Verification routines never return these for a failed identity; a failed
/// identity is recorded in a [`crate::report::VerifyReport`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("polynomial spaces differ: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },

    #[error("expected an exponent vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cannot evaluate: {0}")]
    Evaluation(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("pfaffian needs an even-sized matrix, got size {0}")]
    OddPfaffian(usize),

    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,

    #[error("partition of length {length} does not fit in {bound} parts")]
    TooLong { length: usize, bound: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("unknown name: {0}")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, LabError>;
