use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
///
/// Vertex ids carried by variants are 0-based; front ends translate them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    IdOutOfRange { id: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, above the configured cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("root {0} must not belong to the candidate set")]
    RootInSet(usize),
    #[error("witness for {family}({n}) rejected: {reason}")]
    WitnessRejected {
        family: String,
        n: usize,
        reason: String,
    },
    #[error("no closed form for family {0}")]
    UnsupportedFamily(String),
    #[error("graph is not a block graph")]
    NotBlockGraph,
    #[error("graph is complete; vv = n - 1")]
    CompleteGraph,
    #[error("time limit exceeded")]
    Timeout,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
