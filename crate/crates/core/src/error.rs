use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("sequence {0:?} is not weakly decreasing")]
    NotDecreasing(Vec<i64>),

    #[error("partition parts must be nonnegative, got {0:?}")]
    NegativePart(Vec<i64>),

    #[error("{what} has length {len}, exceeding the available rank {rank}")]
    RankViolation {
        what: &'static str,
        len: usize,
        rank: usize,
    },

    #[error("weight length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("cannot parse partition from {0:?}")]
    Parse(String),

    #[error("cancellation pair refers to a summand missing from the {side} table: {summand}")]
    MissingCancellation { side: &'static str, summand: String },

    #[error("malformed cancellation pair: {0}")]
    MalformedCancellation(String),

    #[error("table is empty")]
    EmptyTable,

    #[error("evaluation budget exceeded: {binomial} = {value} columns > budget {budget}")]
    BudgetExceeded {
        binomial: String,
        value: String,
        budget: u64,
    },

    #[error("failed to sample an invertible matrix after {0} attempts")]
    SingularSample(usize),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
