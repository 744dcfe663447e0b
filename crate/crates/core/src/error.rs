use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices, at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("map is not an embedding: {0}")]
    NotAnEmbedding(String),

    #[error("invalid graph-type: {0}")]
    InvalidType(String),

    #[error("parameter out of supported range: {0}")]
    OutOfRange(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("division by zero in {0}")]
    DivisionByZero(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
