use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input: unknown labels, duplicate relations,
    /// mismatched ground sets, non-flat arguments where flats are required.
    #[error("input error: {0}")]
    Input(String),

    /// A documented precondition of the operation does not hold
    /// (for example a set system outside the class of nonnegative predimension).
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A construction that should always succeed failed its own verification.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
