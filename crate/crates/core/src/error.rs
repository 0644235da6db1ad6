use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected ({exp_eps}|{exp_del}), got ({got_eps}|{got_del})")]
    DimensionMismatch {
        exp_eps: usize,
        exp_del: usize,
        got_eps: usize,
        got_del: usize,
    },
    #[error("weight violates the trace constraint (coordinate sum must vanish)")]
    TraceConstraint,
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("root {0} is not simple in the given Borel")]
    NotSimple(String),
    #[error("root {0} is not isotropic")]
    NotIsotropic(String),
    #[error("invalid odd reflection path: {0}")]
    InvalidPath(String),
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: String, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not supported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
