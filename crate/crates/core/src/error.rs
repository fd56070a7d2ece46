use thiserror::Error;

/// Everything that can go wrong inside `domforge-core`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("expected {expected} per-vertex counts, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("clique gluing needs k >= 1")]
    ZeroCliqueSize,

    #[error("leaf attachment count for vertex {0} is zero; every count must be positive")]
    ZeroLeafCount(usize),

    #[error("{what}: order {order} exceeds the guard of {guard}{hint}")]
    GuardExceeded {
        what: &'static str,
        order: usize,
        guard: usize,
        hint: &'static str,
    },

    #[error("order {order} is out of range for {what} (allowed {min}..={max})")]
    OrderOutOfRange {
        what: &'static str,
        order: usize,
        min: usize,
        max: usize,
    },

    #[error(
        "component of order {order} is not a forest, has no nested closed neighborhoods, \
         and exceeds the brute-force guard of {guard}"
    )]
    Intractable { order: usize, guard: usize },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("graph6: {0}")]
    Graph6(String),
}

pub type Result<T> = std::result::Result<T, Error>;
