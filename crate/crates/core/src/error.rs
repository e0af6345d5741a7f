use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("parallel edge {0}-{1}")]
    ParallelEdge(VertexId, VertexId),

    #[error("edge {0}-{1} has non-positive weight")]
    NonPositiveWeight(VertexId, VertexId),

    #[error("no edge {0}-{1} in graph")]
    UnknownEdge(VertexId, VertexId),

    #[error("edge id {0} does not exist")]
    UnknownEdgeId(usize),

    #[error("vertex {0} is not reachable from the tree root")]
    Unreachable(VertexId),

    #[error("failure set has {got} edges but the oracle supports at most {max}")]
    TooManyFailures { got: usize, max: usize },

    #[error("{0} requires an undirected graph")]
    DirectedUnsupported(&'static str),

    #[error("vertex set must not be empty")]
    EmptyVertexSet,

    #[error("DSO mismatch: {0}")]
    DsoMismatch(String),

    #[error("long path {from}-{to} is not hit by any pivot")]
    UnhitPath { from: VertexId, to: VertexId },

    #[error("pivot tree of {pivot} does not contain the path {from}-{to}")]
    PivotPathMismatch {
        pivot: VertexId,
        from: VertexId,
        to: VertexId,
    },

    #[error("{0} is not a perfect square")]
    NotPerfectSquare(usize),

    #[error("dimension mismatch: graph has root {graph}, tensor has root {tensor}")]
    DimensionMismatch { graph: usize, tensor: usize },

    #[error("invalid index quadruple: {0}")]
    InvalidQuadruple(String),

    #[error("tensor entries M[i,j,y] and M[i,x,y] differ; dichotomy undefined")]
    MixedEntries,

    #[error("dichotomy violated: {0}")]
    DichotomyViolation(String),

    #[error("invalid stretch: {0}")]
    InvalidStretch(String),
}
