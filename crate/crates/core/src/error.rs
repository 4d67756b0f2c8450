use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("graph6 short form supports n <= 62, got n = {0}")]
    UnsupportedSize(usize),

    #[error("vertex set belongs to a graph on {set_n} vertices, expected {graph_n}")]
    HostMismatch { set_n: usize, graph_n: usize },

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("set is not dominating")]
    NotDominating,

    #[error("cannot split a dominating set of size {0}")]
    SplitTooSmall(usize),

    #[error("split produced a dominating half; input was not a minimal dominating set")]
    NotMinimal,

    #[error("coalition operands must be nonempty and disjoint")]
    BadCoalitionOperands,

    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(usize),

    #[error("partition is not a c-partition")]
    NotCPartition,

    #[error("no eligible part for gadget of complement edge {0}-{1}")]
    NoEligibleHost(usize, usize),

    #[error("size table row not applicable: {0}")]
    TableRowInapplicable(String),

    #[error("unknown check id: {0}")]
    UnknownCheck(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
