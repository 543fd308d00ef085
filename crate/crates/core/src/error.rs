use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension {0}: need N >= 2")]
    InvalidDimension(usize),

    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("wrong number of parameters: expected {expected}, got {got}")]
    WrongArity { expected: usize, got: usize },

    #[error("star product is undefined at N = 2")]
    SingularDimension,

    #[error("density matrix carries no bipartition metadata")]
    MissingBipartition,

    #[error("unsupported bipartition {da}x{db}: only 2x2 and 2x3 systems")]
    UnsupportedBipartition { da: usize, db: usize },

    #[error("Bell index {0} out of range 1..=4")]
    BellIndexOutOfRange(usize),

    #[error("phase {phase} outside the covering range [{lo}, {hi}]")]
    PhaseOutOfRange { phase: f64, lo: f64, hi: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("matrix is not a valid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("point is degenerate for the chart embedding")]
    DegeneratePoint,

    #[error("volume estimation failed: every sample was degenerate")]
    EstimationFailed,
}

pub type Result<T> = std::result::Result<T, Error>;
