use thiserror::Error;

/// Errors raised by hypergraph, tensor, and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} appears more than once in a hyperedge")]
    DuplicateVertex(usize),

    #[error("hyperedge {0:?} appears more than once")]
    DuplicateEdge(Vec<usize>),

    #[error("hyperedge must contain at least one vertex")]
    EmptyEdge,

    #[error("vertex set must be nonempty")]
    EmptySelection,

    #[error("hypergraph has no hyperedges")]
    NoEdges,

    #[error("expected a {expected}-uniform hypergraph, found an edge of size {found}")]
    NotUniform { expected: usize, found: usize },

    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),

    #[error("edge families overlap on {0:?}")]
    OverlappingEdges(Vec<usize>),

    #[error("vertex {0} already belongs to the hypergraph")]
    VertexExists(usize),

    #[error("weights must be strictly positive")]
    NonPositiveWeight,

    #[error("expected {expected} weights, found {found}")]
    WeightCount { expected: usize, found: usize },

    #[error("index tuple {index:?} does not fit a tensor of order {order} and dimension {dim}")]
    BadIndex {
        index: Vec<usize>,
        order: usize,
        dim: usize,
    },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("monomial {0:?} repeats a variable")]
    RepeatedVariable(Vec<usize>),

    #[error("variable index {0} is already in use")]
    VariableCollision(usize),

    #[error("polynomial degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("key {0:?} is not a layered e-adjacency key")]
    MalformedKey(Vec<usize>),

    #[error("value {0} is not an integer")]
    NotIntegral(String),

    #[error("{name} = {value} is out of range ({constraint})")]
    OutOfRange {
        name: &'static str,
        value: usize,
        constraint: String,
    },

    #[error("the zero vector cannot be an eigenvector")]
    ZeroVector,

    #[error("power iteration needs a tensor of order at least 2")]
    OrderTooSmall,

    #[error("tensor has no nonzero entries")]
    ZeroTensor,

    #[error("tensor has a negative entry")]
    NegativeEntry,
}

pub type Result<T> = std::result::Result<T, Error>;
