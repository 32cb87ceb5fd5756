use pachner_engine::MoveError;
use thiserror::Error;

use crate::chain::Gamma2Chain;

#[derive(Debug, Error)]
pub enum Gamma2Error {
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("cycle does not close: {0}")]
    ClosureFailure(String),
    #[error("unrecognized configuration: {0}")]
    UnrecognizedConfiguration(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("decomposition stuck: {reason}")]
    DecompositionStuck { reason: String, residual: Box<Gamma2Chain> },
    #[error(transparent)]
    Move(#[from] MoveError),
}
