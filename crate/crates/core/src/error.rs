use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text could not be parsed as a sequence, shape or parameter.
    #[error("parse error: {0}")]
    Parse(String),
    /// A 64-bit count overflowed.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    /// An argument lies outside the supported range.
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// The input does not satisfy the precondition of the operation.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A pattern is not of the required family.
    #[error("malformed pattern: {0}")]
    Pattern(String),
    /// An intermediate object broke an invariant the construction relies on.
    #[error("invariant `{clause}` violated: {detail}")]
    Invariant {
        /// Name of the violated clause.
        clause: &'static str,
        /// What was observed.
        detail: String,
    },
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invariant(clause: &'static str, detail: impl Into<String>) -> Error {
    Error::Invariant { clause, detail: detail.into() }
}
