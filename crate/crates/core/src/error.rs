//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("malformed check matrix: {0}")]
    MalformedCheckMatrix(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("stabilizer decomposition fit failed: {0}")]
    FitFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
