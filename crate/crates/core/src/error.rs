use thiserror::Error;

/// Errors produced by the exact engines.
///
/// Resource guards are reported through [`Error::GuardExceeded`] so that
/// callers can distinguish "too large for the configured budget" (a skip)
/// from a genuine counterexample or malformed input (a failure).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("ambient variable lists differ")]
    AmbientMismatch,

    #[error("{what} guard exceeded: {actual} > {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("time budget exhausted while {0}")]
    BudgetExhausted(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
