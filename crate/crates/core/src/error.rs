use thiserror::Error;

use crate::model::ModelError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// The input does not fit the solver (wrong shape, wrong row count).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A solver broke one of its own invariants. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<ModelError> for SolveError {
    fn from(e: ModelError) -> Self {
        SolveError::Internal(e.to_string())
    }
}
