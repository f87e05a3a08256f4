use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input (duplicate integers, size mismatches, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A textual form could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A configurable budget (group order cap, word count) was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Two computation routes that must agree did not; signals a bug.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Process exit status the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Parse(_) => 2,
            Error::Resource(_) => 3,
            Error::Inconsistency(_) => 4,
        }
    }
}
