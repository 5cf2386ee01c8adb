use thiserror::Error;

use crate::graph::Edge;

/// Errors raised by graph construction, parsing and the graph primitives.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("{0} is not an edge of the graph")]
    MissingEdge(Edge),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has diameter {found}, expected {expected}")]
    WrongDiameter { expected: String, found: String },
    #[error("vertex sequence {0:?} is not a path in the graph")]
    NotAPath(Vec<usize>),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Errors raised by the brute-force oracle.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("candidate pool has {edges} edges, oracle budget allows {max}")]
    BudgetExceeded { edges: usize, max: usize },
    #[error("graph has {0} vertices, the oracle supports at most 128")]
    TooManyVertices(usize),
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("invalid oracle argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the polynomial solvers and the dispatcher.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Errors raised by the reduction generators.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("invalid reduction parameters: {0}")]
    InvalidParameters(String),
    #[error("generated graph has diameter {found}, construction claims {claimed}")]
    DiameterMismatch { claimed: usize, found: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
