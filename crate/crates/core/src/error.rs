//! Error type shared by every module in the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown node id `{0}`")]
    UnknownNode(String),

    #[error("unknown edge id `{0}`")]
    UnknownEdge(String),

    #[error("duplicate node id `{0}`")]
    DuplicateNode(String),

    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),

    #[error("edge record {record} ({src}, {dst}) references missing node `{missing}`")]
    DanglingEndpoint {
        record: usize,
        src: String,
        dst: String,
        missing: String,
    },

    #[error("self-loop on node `{0}` is not supported")]
    SelfLoop(String),

    #[error("subgraph is not contained in the graph: {0}")]
    NotASubgraph(String),

    #[error("invalid feature schema: {0}")]
    InvalidSchema(String),

    #[error("feature schema mismatch: expected `{expected}`, got `{actual}`")]
    SchemaMismatch { expected: String, actual: String },

    #[error("feature vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("samples nonempty required")]
    EmptySamples,

    #[error("samples share no structure")]
    NoCommonStructure,

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("truth subgraph has no nodes")]
    EmptyTruthSubgraph,

    #[error("truth set is empty")]
    EmptyTruthSet,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("separability audit failed: {0}")]
    SeparabilityAudit(String),

    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
