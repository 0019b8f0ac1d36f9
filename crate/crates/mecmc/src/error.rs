//! Error types shared across the crate.

use crate::graph::Vertex;
use thiserror::Error;

/// Structural errors raised while building or querying a mixed graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertices {0} and {1} are already adjacent")]
    AlreadyAdjacent(Vertex, Vertex),
    #[error("no such edge between {0} and {1}")]
    EdgeNotFound(Vertex, Vertex),
    #[error("vertex {0} out of range for graph with {1} vertices")]
    OutOfRange(Vertex, usize),
    #[error("directed part contains a cycle")]
    CycleDetected,
    #[error("graph has undirected edges, expected a DAG")]
    NotDirected,
}

/// Errors from the extension/relabeling pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivError {
    #[error("graph admits no consistent extension")]
    NotExtendable,
    #[error("directed part contains a cycle")]
    CycleDetected,
    #[error("edge between {0} and {1} is not stable: graph is not a completed PDAG")]
    NotCompleted(Vertex, Vertex),
    #[error("edge {0} -> {1} is not a directed edge of the graph")]
    EdgeNotDirected(Vertex, Vertex),
}

/// Errors from applying an operator to a completed PDAG.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("operator is not applicable: {0}")]
    NotApplicable(String),
    #[error("modified graph admits no consistent extension")]
    NotExtendable,
}

impl From<EquivError> for OpError {
    fn from(e: EquivError) -> Self {
        match e {
            EquivError::NotExtendable | EquivError::CycleDetected => OpError::NotExtendable,
            other => OpError::NotApplicable(other.to_string()),
        }
    }
}

/// Errors from the brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("p = {0} exceeds the enumeration limit p <= {1}")]
    TooLarge(usize, usize),
}

/// Errors from the chain runner.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SamplerError {
    #[error("invalid chain configuration: {0}")]
    InvalidConfig(String),
    #[error("operator set is empty at step {0}")]
    EmptyOperatorSet(u64),
    #[error("trace has no records")]
    EmptyTrace,
}

/// Errors from parsing graph files.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}
