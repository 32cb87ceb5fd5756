use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments, unreadable or malformed input. Exit status 2.
    #[error("{0}")]
    Input(String),
    /// The computation itself failed. Exit status 1.
    #[error("{kind}: {message}")]
    Compute { kind: &'static str, message: String },
}

impl CliError {
    pub fn compute(kind: &'static str, e: impl std::fmt::Display) -> Self {
        CliError::Compute { kind, message: e.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute { .. } => 1,
        }
    }

    pub fn diagnostic(&self) -> Diagnostic {
        match self {
            CliError::Input(m) => Diagnostic { status: 2, kind: "input", message: m.clone() },
            CliError::Compute { kind, message } => Diagnostic { status: 1, kind, message: message.clone() },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Diagnostic {
    pub status: i32,
    pub kind: &'static str,
    pub message: String,
}

impl From<pontryagin::PontryaginError> for CliError {
    fn from(e: pontryagin::PontryaginError) -> Self {
        use pontryagin::PontryaginError as P;
        let kind = match &e {
            P::NotACycle(_) => "not-a-cycle",
            P::NotClosedManifold(_) => "not-a-manifold",
            P::Precondition(_) => "precondition",
            P::Cache(_) | P::Io(_) => "cache",
            P::Gamma2(_) => "gamma2",
            P::Move(_) => "moves",
            P::Algebra(_) => "algebra",
            P::Complex(_) => "complex",
        };
        CliError::compute(kind, e)
    }
}

impl From<gamma2::Gamma2Error> for CliError {
    fn from(e: gamma2::Gamma2Error) -> Self {
        CliError::compute("gamma2", e)
    }
}

impl From<pachner_engine::MoveError> for CliError {
    fn from(e: pachner_engine::MoveError) -> Self {
        CliError::compute("moves", e)
    }
}
