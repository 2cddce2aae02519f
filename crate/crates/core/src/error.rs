use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Text input that could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A polynomial division that was required to be exact left a remainder.
    #[error("divisibility error: {0}")]
    Divisibility(String),

    /// A symbolic computation would exceed the configured size limits.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A certificate step failed its check.
    #[error("certificate step `{step}` failed: {detail}")]
    Certificate { step: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
