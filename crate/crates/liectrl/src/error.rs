use thiserror::Error;

/// Crate-wide error type. Everything user-facing is exact and structural, so
/// errors name the offending piece of input rather than a numeric tolerance.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("rows do not form a square matrix: {rows} rows but row {row} has {cols} entries")]
    NotSquare {
        rows: usize,
        row: usize,
        cols: usize,
    },

    #[error("invalid basis index ({i},{j}) for so({n}): need 1 <= i < j <= n")]
    InvalidBasisIndex { n: usize, i: usize, j: usize },

    #[error("empty generator set")]
    EmptyGeneratorSet,

    #[error("duplicate generator {label}")]
    DuplicateGenerator { label: String },

    #[error("target dimension {full_dim} exceeds ambient dimension {ambient}")]
    FullDimOutOfRange { full_dim: usize, ambient: usize },

    #[error("operation requires basis kind {expected}, generator set has {found}")]
    WrongBasisKind { expected: String, found: String },

    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {v} is not a simple edge")]
    SelfLoop { v: usize },

    #[error("permutation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("images {images:?} are not a permutation of 1..={n}")]
    NotAPermutation { n: usize, images: Vec<usize> },

    #[error("point {p} out of range 1..={n}")]
    PointOutOfRange { p: usize, n: usize },

    #[error("cannot parse permutation {text:?}: {reason}")]
    PermutationParse { text: String, reason: String },

    #[error("edge set is not a tree: {reason}")]
    NotATree { reason: String },

    #[error("cross-component bracket [{left}, {right}] is nonzero; the claimed decomposition does not commute")]
    ComponentsInteract { left: String, right: String },

    #[error("matrix is not skew-symmetric: generator {label}")]
    NotSkewSymmetric { label: String },

    #[error("spec field `{field}`: {message}")]
    Spec { field: String, message: String },

    #[error("spec is not valid JSON: {0}")]
    SpecJson(#[from] serde_json::Error),

    #[error("refusing {what} (would enumerate {count} cases); pass allow_large to override")]
    TooLarge { what: String, count: String },
}

impl Error {
    pub(crate) fn spec(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Spec {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
