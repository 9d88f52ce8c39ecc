use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters (n, m) = ({n}, {m}): 2n + m must be at least 2")]
    InvalidParams { n: usize, m: usize },
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("more than one adjacency between {0} and {1}")]
    DuplicateAdjacency(usize, usize),
    #[error("arc type {ty} out of range 1..={n}")]
    BadArcType { ty: usize, n: usize },
    #[error("edge type {ty} out of range 1..={m}")]
    BadEdgeType { ty: usize, m: usize },
    #[error("adjacency label {label} out of range 1..={p}")]
    BadLabel { label: usize, p: usize },
    #[error("vertices must be pairwise distinct")]
    NotDistinct,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("parameter mismatch: source is {source_params}, target is {target_params}")]
    ParamMismatch { source_params: String, target_params: String },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("oracle refused: {0}")]
    OracleCap(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
