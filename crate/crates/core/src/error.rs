use thiserror::Error;

/// Errors raised by every operation in the crate.
///
/// `Capacity` is deliberately separate from a negative answer: exponential
/// solvers report it when an instance exceeds a configured limit instead of
/// returning an approximate or partial result.
#[derive(Debug, Error)]
pub enum Error {
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("capacity exceeded: {what} is {value}, limit is {limit}")]
    Capacity {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
