use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node {node} out of range (graph has {node_count} nodes)")]
    InvalidNode { node: usize, node_count: usize },

    #[error("preference weight undefined for degree {0}; candidates must have k >= 1")]
    NonPositiveDegree(usize),

    #[error("cannot draw {requested} distinct items from {available} candidates")]
    SampleTooLarge { requested: usize, available: usize },

    #[error("weight {weight} at position {index} is not a positive finite number")]
    BadWeight { index: usize, weight: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is disconnected: no path between {0} and {1}")]
    Disconnected(usize, usize),

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("node {0} has degree 0")]
    IsolatedNode(usize),

    #[error("power-law fit needs at least 3 points in [{k_min}, {k_upper}], found {found}")]
    TooFewFitPoints {
        k_min: f64,
        k_upper: f64,
        found: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
