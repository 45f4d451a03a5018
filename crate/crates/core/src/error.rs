use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid root: {0}")]
    InvalidRoot(String),

    #[error("Cartan matrix is not of finite type (closure exceeded {limit} roots)")]
    NotFiniteType { limit: usize },

    #[error("group too large to enumerate (more than {limit} elements)")]
    GroupTooLarge { limit: usize },

    #[error("point does not assign a value to variable {0}")]
    IncompletePoint(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
