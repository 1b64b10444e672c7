use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("instance too large for {what}: {size} exceeds budget {budget}")]
    InstanceTooLarge {
        what: &'static str,
        size: usize,
        budget: usize,
    },

    #[error("invalid ratio: {0}")]
    InvalidRatio(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "graph is not bipartite with the given parts: edge {{{0}, {1}}} stays inside one side"
    )]
    NotBipartite(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("gadget construction failed: {0}")]
    Gadget(String),

    #[error("illegal heuristic trace: {0}")]
    IllegalTrace(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
