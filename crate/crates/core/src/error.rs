use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("{what} exceeds the cap of {limit} (raise it with --cap or PERFCODE_CAP)")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a transversal: {0}")]
    NotATransversal(String),
    #[error("transversal is not inverse-closed")]
    NotInverseClosed,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("no subgroup found: {0}")]
    NotFound(String),
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;
