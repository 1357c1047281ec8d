use thiserror::Error;

/// Errors produced by the library. Verification failures are not errors;
/// they are reported through the check reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    Singular,

    #[error("expected {expected}, found rank {found}")]
    Rank { expected: String, found: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("factor permutation {sigma} is not admissible for format {format}")]
    Admissibility { sigma: String, format: String },

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCap { cap: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("unknown name {0:?}")]
    UnknownName(String),

    #[error("domain error: {0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
