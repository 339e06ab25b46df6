use thiserror::Error;

/// Largest order any graph in this crate may have.
pub const MAX_ORDER: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("order {order} exceeds supported bound {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("expected a unique central vertex, found {count}")]
    NotSingleCenter { count: usize },
    #[error("radius {radius} is too small (need at least 2)")]
    RadiusTooSmall { radius: u32 },
    #[error("center graph H must have at least one vertex")]
    EmptyH,
    #[error("graph is not self-centered (radius {radius}, diameter {diameter})")]
    NotSelfCentered { radius: u32, diameter: u32 },
    #[error("{0}")]
    PrescriptionOutOfRange(String),
    #[error("vertex {vertex} of Y is adjacent to every other vertex of Y")]
    UniversalVertexInY { vertex: usize },
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// Failures while decoding graph6 or edge-list input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("bad character {found:?} at byte {position}")]
    BadCharacter { found: char, position: usize },
    #[error("bitstream truncated: expected {expected} data bytes, found {found}")]
    TruncatedBitstream { expected: usize, found: usize },
    #[error("edge ({u}, {v}) out of range for order {order}")]
    EdgeOutOfRange { u: usize, v: usize, order: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
