use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: bad ids, mismatched keys, broken host model.
    #[error("structural error: {0}")]
    Structural(String),
    /// A precondition on the arguments of an operation does not hold.
    #[error("argument error: {0}")]
    Argument(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An exhaustive search was asked to go beyond its hard-coded limits.
    #[error("cap exceeded: {0}")]
    Cap(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn structural<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Structural(msg.into()))
}

pub(crate) fn argument<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
