use thiserror::Error;

/// Errors raised by constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape parameters: {0}")]
    InvalidShape(String),
    #[error("truncation {requested} is too small (need at least {needed})")]
    TruncationTooSmall { requested: usize, needed: usize },
    #[error("no such cell: {0}")]
    MissingCell(String),
    #[error("map is not injective on nondegenerate simplices")]
    NotInjective,
    #[error("maps have mismatched sources or targets")]
    MismatchedMaps,
    #[error("invalid 2-category: {0}")]
    Invalid2Category(String),
    #[error("invalid wedge presentation: {0}")]
    InvalidPresentation(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
