use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} has already been removed")]
    DeadVertex(usize),

    #[error("cannot fold at vertex {vertex}: {reason}")]
    FoldPrecondition { vertex: usize, reason: &'static str },

    #[error("vertices {0} and {1} are adjacent, the set is not independent")]
    NotIndependent(usize, usize),

    #[error("solution contract violated at vertex {vertex}: {reason}")]
    SolutionContract { vertex: usize, reason: &'static str },

    #[error("graph has {alive} live vertices, exact solver refuses more than {limit}")]
    TooLarge { alive: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
