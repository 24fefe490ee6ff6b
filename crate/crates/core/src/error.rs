use thiserror::Error;

#[derive(Debug, Error)]
pub enum BmwError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, BmwError>;
