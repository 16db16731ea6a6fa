use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid arguments or inputs that violate an operation's preconditions.
    #[error("{0}")]
    Usage(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("count does not fit in 128 bits")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
