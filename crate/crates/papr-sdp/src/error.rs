use thiserror::Error;

/// Errors surfaced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inconsistent constraints: {0}")]
    InconsistentConstraints(String),

    #[error("solver did not converge after {iterations} iterations (primal {primal:.3e}, dual {dual:.3e})")]
    SolverMaxIter {
        iterations: usize,
        primal: f64,
        dual: f64,
    },

    #[error("problem certified infeasible after {0} iterations")]
    Infeasible(usize),

    #[error("experiment failed: {failed} of {trials} trials errored")]
    TrialFailures { failed: usize, trials: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
