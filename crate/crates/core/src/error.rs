use thiserror::Error;

use crate::spinmodels::ModelKind;

/// Failures raised by the numerical kernel and the physics layers above it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:e})")]
    NotPositiveSemidefinite { eigenvalue: f64 },

    #[error("density matrix trace is {trace}, expected 1")]
    NotNormalized { trace: f64 },

    #[error("expected a {expected}x{expected} matrix, got {found}x{found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("temperature must be positive and finite, got {0}")]
    InvalidTemperature(f64),

    #[error("operation requires the {expected} model, got {found}")]
    WrongModelKind { expected: ModelKind, found: ModelKind },

    #[error("closed-form expressions are undefined for J = 0")]
    ZeroCoupling,

    #[error("invalid temperature bracket [{lo}, {hi}]")]
    InvalidBracket { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
