use thiserror::Error;

use crate::feasibility::Certificate;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed configuration: {0}")]
    Config(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("length mismatch for {what}: expected {expected}, got {got}")]
    Length { what: &'static str, expected: usize, got: usize },

    #[error("non-integer data: {0}")]
    NonInteger(String),

    #[error("boundary data is infeasible: {0}")]
    Infeasible(Box<Certificate>),

    #[error("inadmissible flow at node ({layer},{col}): {detail}")]
    Inadmissible { layer: usize, col: usize, detail: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn length(what: &'static str, expected: usize, got: usize) -> Self {
        Error::Length { what, expected, got }
    }
}
