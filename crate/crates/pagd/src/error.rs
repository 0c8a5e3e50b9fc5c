use thiserror::Error;

/// Crate-wide error type.
///
/// The variants map onto the process exit codes used by the `pagd` CLI:
/// invalid input/config is exit 2, an infeasible power budget is exit 3,
/// and instability or solver non-convergence is exit 4.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The power budget cannot cover the requested floor.
    #[error("insufficient budget for power allocation: {0}")]
    InfeasibleBudget(String),

    /// A closed-loop matrix has spectral radius at or above one.
    #[error("unstable closed loop: spectral radius {rho:.6} >= 1")]
    Unstable { rho: f64 },

    /// An iterative solver failed to converge or a residual check failed.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// An experiment configuration failed validation.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::InvalidConfig(_) | Error::Io(_) => 2,
            Error::InfeasibleBudget(_) => 3,
            Error::Unstable { .. } | Error::NumericalFailure(_) => 4,
        }
    }
}
