use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: VertexId, vertex_count: usize },

    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotInGraph(VertexId, VertexId),

    /// A generator or solver would exceed its configured size or work limit.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Two independent evaluations of the same quantity disagreed.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}
