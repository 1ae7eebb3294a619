use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error in term `{term}`: {reason}")]
    Parse { term: String, reason: String },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("sequence is not graphical: {0}")]
    NotGraphical(crate::degree_seq::GraphicalityViolation),

    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("unsupported property: {0}")]
    Unsupported(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("graph file line {line}: {reason}")]
    GraphFormat { line: usize, reason: String },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}

pub(crate) fn range(msg: impl Into<String>) -> Error {
    Error::Range(msg.into())
}
