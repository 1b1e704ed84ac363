use thiserror::Error;

/// Failures raised by the library. Verification mismatches are not errors;
/// they are reported through the report types of each driver.
#[derive(Debug, Error)]
pub enum Error {
    /// A documented precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),
    /// Malformed textual input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// A search budget was exhausted before an answer was certified.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// A statement that the library checks was found to be false.
    #[error("theorem violation: {0}")]
    Violation(String),
    /// An internal invariant failed. This always indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}
