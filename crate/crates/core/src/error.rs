use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: vertex {vertex} out of range 1..={d}")]
    VertexOutOfRange { line: usize, vertex: i64, d: usize },

    #[error("line {line}: loop edge at vertex {vertex}")]
    LoopEdge { line: usize, vertex: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("{what} exceeds enumeration bound ({actual} > {limit})")]
    BoundExceeded {
        what: &'static str,
        limit: u128,
        actual: u128,
    },

    #[error("not a permutation of 1..={d}: {detail}")]
    NotPermutation { d: usize, detail: String },

    #[error("improper coloring: vertices {0} and {1} share color {2}")]
    ImproperColoring(usize, usize, u32),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),

    #[error("monomial {0} is not in the coloring ideal")]
    NotInIdeal(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("polynomial of degree {degree} needs denominator exponent > {degree}, got {exponent}")]
    DegreeTooHigh { degree: usize, exponent: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("expected a monic polynomial of degree {0}")]
    NotMonic(usize),

    #[error("cannot divide by t: constant term is {0}")]
    NonzeroConstant(String),

    #[error("({0},{1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("edges must be distinct")]
    SameEdge,

    #[error("coloring complex needs at least 3 vertices, graph has {0}")]
    TooFewVertices(usize),

    #[error("graph has {0} vertices; at most 32 are supported")]
    TooManyVertices(usize),

    #[error("{0}")]
    Invalid(String),
}
