use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{{{0},{1}}} is not an edge")]
    MissingEdge(usize, usize),
    #[error("exact chromatic number limited to {bound} vertices, graph has {vertex_count}")]
    BoundExceeded { vertex_count: usize, bound: usize },

    #[error("circulant jump {jump} outside [1, {max}]")]
    JumpOutOfRange { jump: usize, max: usize },
    #[error("toeplitz offset {offset} outside [1, {max}]")]
    OffsetOutOfRange { offset: usize, max: usize },
    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("edge {{{0},{1}}} has no direction")]
    UncoveredEdge(usize, usize),
    #[error("edge {{{0},{1}}} is directed twice")]
    DoubleAssignment(usize, usize),
    #[error("arc {0}->{1} has no underlying edge")]
    NotAnEdge(usize, usize),
    #[error("orientation has a directed cycle")]
    NotAcyclic,
    #[error("coloring is not proper on edge {{{0},{1}}}")]
    ImproperColoring(usize, usize),
    #[error("graph has {edges} edges, enumeration is capped at {cap}")]
    TooLarge { edges: usize, cap: usize },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("line {line}, column {column}: {message} (at `{token}`)")]
    Parse {
        line: usize,
        column: usize,
        token: String,
        message: String,
    },
    #[error("step {index} (`{step}`) in copy {copy} rejected: {reason}\n{state}")]
    StepRejected {
        index: usize,
        step: String,
        copy: String,
        reason: String,
        state: String,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
