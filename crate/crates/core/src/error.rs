use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A construction or search would exceed a configured bound.
    #[error("size bound exceeded: {what} needs {actual}, limit is {limit}")]
    Size {
        what: &'static str,
        actual: u128,
        limit: u128,
    },
    /// The operation needs an element table and the base ring is the integer backend.
    #[error("unsupported on the integer backend: {0}")]
    Unsupported(&'static str),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("base rings differ")]
    BaseMismatch,
    /// An operation table violates an axiom; `witness` names the offending tuple.
    #[error("axiom `{axiom}` fails at {witness}")]
    Validation { axiom: &'static str, witness: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn size(what: &'static str, actual: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::Size {
            what,
            actual: actual.into(),
            limit: limit.into(),
        }
    }

    pub(crate) fn invalid(axiom: &'static str, witness: impl Into<String>) -> Self {
        Error::Validation {
            axiom,
            witness: witness.into(),
        }
    }
}
