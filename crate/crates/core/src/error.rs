use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("header declares {declared} edges but {found} distinct edges were read")]
    EdgeCountMismatch { declared: usize, found: usize },

    #[error("coloring has {coloring} entries but the graph has {graph} vertices")]
    LengthMismatch { coloring: usize, graph: usize },

    #[error("coloring is not a quasi neighborhood balanced coloring (classified {0})")]
    NotQnbc(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph on {n} vertices is too large for exhaustive search (limit {limit})")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid vertex map: {0}")]
    InvalidMap(String),

    #[error("malformed gadget: {0}")]
    MalformedGadget(String),
}
