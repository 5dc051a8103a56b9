use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("non-exact division: {0}")]
    NonExactDivision(String),
    #[error("invalid cell: {0}")]
    InvalidCell(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parity error: {0}")]
    ParityError(String),
    #[error("size error: {0}")]
    SizeError(String),
    #[error("context error: {0}")]
    ContextError(String),
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("flag enumeration too large: {0}")]
    TooLarge(String),
    #[error("orthogonal flags need an odd field, got q = {0}")]
    EvenField(u64),
    #[error("interpolation unstable: {0}")]
    InterpolationUnstable(String),
    #[error("fiber count is not a polynomial: {0}")]
    NonPolynomialFiber(String),
    #[error("triangularity failure: {0}")]
    TriangularityFailure(String),
    #[error("no solution for bar-invariance equation: {0}")]
    NoSolution(String),
    #[error("fit unstable: {0}")]
    FitUnstable(String),
    #[error("not stabilized: {0}")]
    NotStabilized(String),
    #[error("inconsistent homomorphism: {0}")]
    InconsistentHom(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
