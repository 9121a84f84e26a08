use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed user text: cycle notation, group spec, set spec.
    #[error("parse error: {0}")]
    Parse(String),

    /// A precondition on the inputs does not hold (degree mismatch,
    /// non-symmetric connection set, identity in the set, ...).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// An order, oracle or enumeration cap was exceeded.
    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    /// A self-check failed. Always a bug or a numerical breakdown, never a verdict.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Invalid(_) => 2,
            Error::CapExceeded { .. } => 3,
            Error::Verification(_) => 4,
            Error::Io(_) => 5,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
