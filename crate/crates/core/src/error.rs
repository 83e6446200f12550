use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("part count {k} does not divide vertex count {n}")]
    PartCountNotDivisor { n: usize, k: usize },

    #[error("unbalanced partition: part {part} has {size} vertices, expected {expected}")]
    UnbalancedPartition { part: usize, size: usize, expected: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {u}-{v} joins two vertices of part {part}")]
    IntraPartEdge { u: usize, v: usize, part: usize },

    #[error("invalid vertex sets: {0}")]
    InvalidVertexSets(String),

    #[error("size guard exceeded: {what} requires n <= {limit}, got {n}")]
    GuardExceeded { what: &'static str, n: usize, limit: usize },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("infeasible family parameters: {0}")]
    InfeasibleFamily(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("graph is acyclic")]
    Acyclic,
}

pub type Result<T> = std::result::Result<T, Error>;
