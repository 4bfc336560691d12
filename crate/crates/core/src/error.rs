use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {0} out of range (1..={max})", max = crate::cube::MAX_DIM)]
    DimensionOutOfRange(u32),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: u32, found: u32 },

    #[error("{0:#b} is not an edge of the host cube")]
    NotACubeEdge(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The construction's hypothesis does not hold for the requested parameters.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// A degree demand that no choice of candidate edges can meet.
    #[error("infeasible degree demand: {0}")]
    Infeasible(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("graph already contains the forbidden tree")]
    NotFree,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
