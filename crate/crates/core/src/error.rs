use thiserror::Error;

/// Errors raised by graph construction, parsing and the higher-level
/// operations. Vertex numbers carried by these errors are 1-based, matching
/// the text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GemError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("dimension {0} is outside the supported range 1..={max}", max = crate::MAX_DIM)]
    DimensionOutOfRange(usize),

    #[error("expected {expected} color classes, found {found}")]
    ColorCount { expected: usize, found: usize },

    #[error("color {color}: vertex {vertex} out of range 1..={vertex_count}")]
    VertexOutOfRange {
        color: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("color {color}: loop at vertex {vertex}")]
    Loop { color: usize, vertex: usize },

    #[error("color {color}: vertex {vertex} appears in more than one pair")]
    DuplicatePair { color: usize, vertex: usize },

    #[error("color {color} not a total pairing (vertex {vertex} unmatched)")]
    NotTotal { color: usize, vertex: usize },

    #[error("color {color} is not in 0..={dim}")]
    ColorOutOfRange { color: usize, dim: usize },

    #[error("empty color set")]
    EmptyColorSet,

    #[error("alternating ({color},{last})-path from boundary vertex {vertex} does not end at a boundary vertex")]
    BrokenBoundaryPath {
        color: usize,
        last: usize,
        vertex: usize,
    },

    #[error("operation requires dimension {required}, graph has dimension {found}")]
    DimensionMismatch { required: usize, found: usize },

    #[error("graph has no boundary vertices")]
    ClosedInput,

    #[error("graph is not a crystallization: {0}")]
    NotCrystallization(String),

    #[error("manifold must have at least one boundary component")]
    NoBoundary,

    #[error("missing manifold data: {0}")]
    MissingMeta(&'static str),

    #[error("vertex {vertex} does not exist (graph has {vertex_count} vertices)")]
    NoSuchVertex { vertex: usize, vertex_count: usize },

    #[error("color {color}: vertex {first} of the first graph and vertex {second} of the second differ in whether they carry an edge")]
    DegreeMismatch {
        color: usize,
        first: usize,
        second: usize,
    },

    #[error("connected sum precondition failed: {0}")]
    SumPrecondition(String),

    #[error("stale dipole {first}-{second} of color {color}")]
    StaleDipole {
        color: usize,
        first: usize,
        second: usize,
    },

    #[error("no 1-dipole of color {color} available at stage {stage}")]
    DipoleNotFound { color: usize, stage: usize },

    #[error("invalid permutation scheme: {0}")]
    InvalidScheme(String),

    #[error("genus formulas disagree for scheme {scheme}: {detail}")]
    FormulaDisagreement { scheme: String, detail: String },

    #[error("construction check failed: {0}")]
    ConstructionCheck(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
}

pub type Result<T, E = GemError> = std::result::Result<T, E>;
