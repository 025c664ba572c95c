use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("evaluation point has a zero coordinate at index {0}")]
    ZeroCoordinate(usize),

    #[error("{0} is the zero polynomial")]
    ZeroPolynomial(&'static str),

    #[error("{0} has degree 0 in lambda")]
    ConstantInLambda(&'static str),

    #[error("shift m = {m:?} is zero modulo N = {n}")]
    TrivialShift { m: Vec<i64>, n: u64 },

    #[error("offset must be nonzero")]
    ZeroOffset,

    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),

    #[error("symbol is not Hermitian on the torus at entry ({row}, {col})")]
    NotHermitian { row: usize, col: usize },

    #[error("matrix deviates from Hermitian by {0:e}")]
    NonHermitianMatrix(f64),

    #[error("eigenvalue iteration did not converge")]
    NoConvergence,

    #[error("operator kind mismatch: expected {0}")]
    WrongKind(&'static str),

    #[error("parse error in `{field}`: {message}")]
    Parse { field: String, message: String },

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}
