use thiserror::Error;

use crate::weyl::Frame;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {message}")]
pub struct ParseError {
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("cyclic parameter binding through {0}")]
    CyclicBinding(&'static str),

    #[error("frame mismatch: expected {expected}, found {found}")]
    FrameMismatch { expected: Frame, found: Frame },

    #[error("invalid singular vector parameters: {0}")]
    InvalidSpec(String),

    #[error("(k, n) = ({k}, {n}) is outside the summation range")]
    OutOfRange { k: u32, n: u32 },

    #[error("unsupported action table: {0}")]
    UnsupportedTable(String),

    #[error("table data invalid: {0}")]
    TableData(String),
}
