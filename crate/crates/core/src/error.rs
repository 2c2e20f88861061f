use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed matrix or polynomial text.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// An operation was called outside its precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A formula was evaluated outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative numerical method did not reach the requested accuracy.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A bounded search ran past its horizon without finding a power.
    #[error("search exhausted: no nu <= {horizon} found ({detail})")]
    Exhausted { horizon: u64, detail: String },

    /// The input is below the size threshold a constructive argument needs.
    #[error("below threshold: {0}")]
    BelowThreshold(String),

    /// A value does not fit the fixed-width type used to report it.
    #[error("overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
