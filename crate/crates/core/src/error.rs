use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument referenced a vertex/edge that does not exist, or a
    /// parameter was outside its documented range.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The requested quantity is undefined on this input (isolated
    /// vertices for domination-style colorings, empty graphs, formula
    /// domains).
    #[error("domain error: {0}")]
    Domain(String),

    /// The instance exceeds a configured size budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// graph6 decoding failure; `offset` is the byte position in the record.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6Parse { offset: usize, message: String },

    /// A certificate failed its validity check.
    #[error("invalid certificate: {0}")]
    Certificate(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialize(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }
}
