use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must be >= 1")]
    InvalidK,

    #[error("ring elements belong to different parameters (k = {left} vs k = {right})")]
    ParamMismatch { left: u64, right: u64 },

    #[error("k = 1 is degenerate here: (k-1)^-n is undefined")]
    DegenerateParameter,

    #[error("index {n} exceeds the iterative engine cap of {cap}")]
    IterativeCapExceeded { n: u64, cap: u64 },

    #[error("index {index} is outside the precomputed range 0..={max}")]
    IndexOutOfRange { index: u64, max: u64 },

    #[error("series denominator must have constant term +1 or -1")]
    NonUnitConstantTerm,

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
