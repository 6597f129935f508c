use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The input is well formed but outside the domain of the operation,
    /// e.g. a segment longer than `n`.
    #[error("domain violation: {0}")]
    Domain(String),
    /// The request exceeds the enumeration bounds of exact computation.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("vector is not an eigenvector of {0}")]
    NotEigenvector(String),
    #[error("subspace is not closed under {0}")]
    NotClosed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
