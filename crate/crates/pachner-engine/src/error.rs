use simplicial_core::{ComplexError, OrientedComplex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MoveError {
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("search budget of {budget} moves exhausted; best state has {} vertices", best.num_vertices())]
    BudgetExhausted { budget: usize, best: Box<OrientedComplex> },
    #[error("certificate does not replay: {0}")]
    BadCertificate(String),
    #[error("not a combinatorial sphere: {0}")]
    NotASphere(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
