use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0}, {1}}} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} not present")]
    MissingEdge(usize, usize),
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("invalid enumeration task: {0}")]
    InvalidTask(String),
    #[error("claim parameters out of range: {0}")]
    ClaimRange(String),
    #[error("malformed report: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;
