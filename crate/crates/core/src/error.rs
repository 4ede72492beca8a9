use thiserror::Error;

/// Errors raised by graph construction, colorings, searches and parsers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty factor")]
    EmptyFactor,
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("instance too large: {what} is {size}, cap is {cap}")]
    InstanceTooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("enumeration too large: {size} product vertices, cap is {cap}")]
    EnumerationTooLarge { size: usize, cap: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("improper coloring: vertices {0} and {1} are adjacent and share a color")]
    ImproperColoring(usize, usize),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("precoloring conflict: vertices {0} and {1} are adjacent and pinned to the same color")]
    PrecoloringConflict(usize, usize),
    #[error("greedy/pin collision at vertex {vertex} (color {color})")]
    GreedyPinCollision { vertex: usize, color: u32 },
    #[error("invalid Latin rectangle: {0}")]
    InvalidLatin(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// An equality or certificate that a theorem guarantees did not hold.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
