use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("incompatible operands: {0}")]
    Incompatible(String),

    #[error("cycle is cyclically oriented (needs at least one arrow in each direction)")]
    CyclicOrientation,

    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("factorization over Q beyond degree 4 is unsupported: {0}")]
    NonSplitField(String),

    #[error("no isomorphism to canonical forms found; this indicates a bug in decomposition")]
    CertificateFailure,

    #[error("representation is not indecomposable")]
    NotIndecomposable,

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("operation leaves the module heart (interval start is already 1)")]
    LeavesHeart,
}

pub type Result<T> = std::result::Result<T, Error>;
