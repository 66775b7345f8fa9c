use thiserror::Error;

/// Domain errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown basis `{0}`")]
    UnknownBasis(String),
    #[error("basis `{0}` requires interpolation nodes")]
    MissingNodes(String),
    #[error("basis `{0}` does not take interpolation nodes")]
    UnexpectedNodes(String),
    #[error("nodes must be pairwise distinct")]
    DuplicateNodes,
    #[error("basis `{0}` has no exact rational recurrence; use float mode")]
    ExactUnsupported(String),
    #[error("coefficient index {index} exceeds the table of basis `{name}` (last index {max})")]
    CoeffOutOfRange {
        name: String,
        index: usize,
        max: usize,
    },
    #[error("recurrence coefficient alpha({index}) of basis `{name}` is zero")]
    ZeroAlpha { name: String, index: usize },
    #[error("empty coefficient vector")]
    EmptyCoeffs,
    #[error("basis mismatch: `{0}` vs `{1}`")]
    BasisMismatch(String, String),
    #[error("interval mismatch: [{0}, {1}] vs [{2}, {3}]")]
    IntervalMismatch(String, String, String, String),
    #[error("degenerate interval: need a < b, got [{0}, {1}]")]
    DegenerateInterval(String, String),
    #[error("lift target degree {m} must exceed source degree {n}")]
    LiftTargetTooSmall { n: usize, m: usize },
    #[error("pad width {m} is below the matrix width k={k}")]
    PadTooSmall { m: usize, k: usize },
    #[error("power exponent must be >= 1")]
    InvalidPower,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("basis `{0}` is not flagged orthonormal")]
    NotOrthonormal(String),
    #[error("could not generate {needed} extra nodes distinct from the existing ones")]
    NodeGeneration { needed: usize },
    #[error("extra nodes must be supplied explicitly in exact mode")]
    ExactNodesRequired,
    #[error("node sets do not share their leading min(m,n)+1 nodes")]
    NodesNotNested,
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
