use thiserror::Error;

use crate::graph::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a graph failed maximal outerplanar recognition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MopRejection {
    #[error("fewer than 3 vertices ({0})")]
    TooFewVertices(usize),
    #[error("edge count {found} ≠ {expected}")]
    EdgeCount { found: usize, expected: usize },
    #[error("edges lying in exactly one triangle do not form a Hamiltonian cycle")]
    NoHamiltonianOuterCycle,
    #[error("chords {{{0},{1}}} and {{{2},{3}}} cross")]
    CrossingChords(usize, usize, usize, usize),
}

/// Why a graph failed 2-tree recognition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoTreeRejection {
    #[error("fewer than 3 vertices ({0})")]
    TooFewVertices(usize),
    #[error("no simplicial degree-2 vertex with {remaining} vertices left")]
    Stuck { remaining: usize },
    #[error("remaining three vertices do not form a triangle")]
    KernelNotTriangle,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("not MOP: {0}")]
    NotMop(#[from] MopRejection),
    #[error("not a 2-tree: {0}")]
    NotTwoTree(#[from] TwoTreeRejection),
    #[error("needs at least {needed} vertices, got {found}")]
    TooSmall { needed: usize, found: usize },
    #[error("embedding does not match graph: {0}")]
    EmbeddingMismatch(String),
    #[error("invalid peel sequence: {0}")]
    InvalidPeel(String),
    #[error("vertex {0} is isolated, no double dominating set exists")]
    IsolatedVertex(usize),
    #[error("graph on {n} vertices exceeds enumeration limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("node budget {budget} exceeded; best found has size {}", best.len())]
    BudgetExceeded { budget: u64, best: VertexSet, nodes: u64 },
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
