use gamma2::Gamma2Error;
use pachner_engine::MoveError;
use simplicial_core::ComplexError;
use t_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PontryaginError {
    #[error("chain is not a cycle: {0}")]
    NotACycle(String),
    #[error("not a closed combinatorial manifold: {0}")]
    NotClosedManifold(String),
    #[error("expected {0}")]
    Precondition(String),
    #[error("xi cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Gamma2(#[from] Gamma2Error),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
