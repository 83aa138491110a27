use thiserror::Error;

/// Errors raised by the workbench operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter `{name}` out of range: {reason}")]
    ParameterOutOfRange { name: &'static str, reason: String },

    #[error("vertex capacity exceeded: {requested} > {max}", max = crate::graph::MAX_VERTICES)]
    CapacityExceeded { requested: usize },

    #[error("malformed graph6 input at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("size limit exceeded: {what} supports at most {max} vertices, got {got}")]
    SizeLimit { what: &'static str, max: usize, got: usize },

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("zero vector")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid surgery: {0}")]
    InvalidSurgery(String),

    #[error("unsupported family for closed form: {0}")]
    UnsupportedFamily(String),

    #[error("parity mismatch: {family} needs {expected} n, got {n}")]
    ParityMismatch { family: &'static str, expected: &'static str, n: usize },

    #[error("pattern forest must have at least one edge: {0}")]
    EdgelessForest(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search cap exceeded: n = {n} > {cap} (pass an explicit override to allow n = 10)")]
    SearchCap { n: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
