use simplicial_core::ComplexError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("manifold dimension {manifold} is below cochain grade {grade}")]
    DimensionTooSmall { manifold: isize, grade: usize },
    #[error("sphere check failed: {0}")]
    SphereCheckFailed(String),
    #[error("chain is not a cycle: {0}")]
    NotClosedCycle(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Move(#[from] pachner_engine::MoveError),
}
