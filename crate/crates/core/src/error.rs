use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("atom {token} is out of range for {strands} strands")]
    AtomOutOfRange { token: String, strands: usize },

    #[error("unsupported number of strands {0} (expected 2..=16)")]
    Strands(usize),

    #[error("unknown structure {0:?}")]
    UnknownStructure(String),

    #[error("resource limit exceeded: {what} > {limit}")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
