use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("dataset error in graph '{graph}': {message}")]
    Dataset { graph: String, message: String },
    #[error("invalid cost model: {0}")]
    InvalidCosts(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("infeasible assignment: {0}")]
    InfeasibleAssignment(String),
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("ring size mismatch: expected {expected} layers, got {got}")]
    RingSizeMismatch { expected: usize, got: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("feature dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("method requires a trained model")]
    MissingModel,
    #[error("missing class labels: {0}")]
    MissingClassLabels(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(
        "could only generate {achieved} of {requested} pairwise non-isomorphic trees \
         for the requested size range"
    )]
    SyntheticExhausted { requested: usize, achieved: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
