use thiserror::Error;

/// Errors produced by graph construction, matrix building, the eigensolver
/// and the verification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid order {n}: {reason}")]
    InvalidOrder { n: usize, reason: String },

    #[error("inconsistent parameters: {0}")]
    InconsistentParameters(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("eigenvalue index {k} out of range 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("order range {lo}..={hi} is outside the exhaustive range {min}..={max}")]
    RangeUnsupported {
        lo: usize,
        hi: usize,
        min: usize,
        max: usize,
    },

    #[error("worker pool: {0}")]
    WorkerPool(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid_order(n: usize, reason: impl Into<String>) -> Self {
        Error::InvalidOrder {
            n,
            reason: reason.into(),
        }
    }
}
