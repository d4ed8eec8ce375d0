use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("function has {found} values but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid function value {0:?}, expected 0, 1 or 2")]
    InvalidValue(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph has isolated vertex {0}; the enumerator requires graphs without isolated vertices")]
    IsolatedVertex(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph order {order} exceeds the oracle limit of {limit}")]
    OracleLimit { order: usize, limit: usize },

    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
