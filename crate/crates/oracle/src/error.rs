use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("oracle inconsistency: {0}")]
    Inconsistent(String),
    #[error("no solution while lifting: {0}")]
    NoSolution(String),
}
