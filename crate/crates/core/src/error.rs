use thiserror::Error;

/// Errors surfaced by the engine.
///
/// `Internal` marks a broken invariant inside the engine itself (a bug),
/// never a condition a caller can trigger with well-formed input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("evaluation at a jump point: {0}")]
    JumpPoint(String),

    #[error("contradictory certificates: {0}")]
    Contradiction(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
