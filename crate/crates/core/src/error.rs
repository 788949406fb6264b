use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected (vertex {unreached} unreachable from vertex 0)")]
    Disconnected { unreached: usize },

    #[error("invalid size {n} for family {family}")]
    InvalidFamilySize { family: String, n: usize },

    #[error("alpha {0} outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("eigensolver did not converge at index {index} (residual {residual:e})")]
    NoConvergence { index: usize, residual: f64 },

    #[error("complex eigenvalues: discriminant {discriminant:e}")]
    ComplexEigenvalues { discriminant: f64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("exponential overflow for eigenvalue {value}")]
    Overflow { value: f64 },

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("subset precondition violated by vertices {first} and {second}: {reason}")]
    SubsetPrecondition {
        first: usize,
        second: usize,
        reason: String,
    },

    #[error("{0}")]
    Precondition(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
