use thiserror::Error;

use crate::graph::MAX_VERTICES;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    Size(usize),

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("vertex {vertex} out of bounds for graph on {n} vertices")]
    Bounds { vertex: usize, n: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{{{0}, {1}}} is not an edge")]
    MissingEdge(usize, usize),

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Carries the lexicographically smallest triangle.
    #[error("graph is not triangle-free (triangle {} {} {})", .0[0], .0[1], .0[2])]
    NotTriangleFree([usize; 3]),

    #[error("exhaustive scan refused for n = {n} (limit {limit}); combinatorial explosion guard")]
    ExplosionGuard { n: usize, limit: usize },
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn param(message: impl Into<String>) -> Self {
        Error::Parameter(message.into())
    }
}
