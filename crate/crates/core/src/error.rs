use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}: only simple graphs are supported")]
    Loop(usize),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("density parameter k must be at least 2, got {0}")]
    InvalidK(usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("empty input")]
    EmptyInput,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("graph on {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("certificate for {recipe} failed: {detail}")]
    Certificate { recipe: String, detail: String },

    #[error("no construction route reaches {a} edges for k={k}, n={n}")]
    Unrealized { k: usize, n: usize, a: usize },
}
