use thiserror::Error;

/// Errors raised while building or combining words, endomorphisms and
/// mapping classes.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid range: need 1 <= {start} <= {end}")]
    InvalidRange { start: usize, end: usize },
    #[error("invalid genus {0}: must be at least 1")]
    InvalidGenus(usize),
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown atom `{name}` at position {position}")]
    UnknownAtom { position: usize, name: String },
    #[error("certification failed: {0}")]
    Certification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
