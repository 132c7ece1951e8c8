use thiserror::Error;

/// Errors raised by the gain-graph toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("operands belong to different groups")]
    GroupMismatch,

    #[error("operands live on different graphs")]
    GraphMismatch,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("{0} is not a central weak involution")]
    NotCentralInvolution(String),

    #[error("invalid G-phase: {0}")]
    InvalidPhase(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("representation {kind} does not apply to {group}")]
    RepresentationNotApplicable { kind: String, group: String },

    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
