use thiserror::Error;

/// Errors raised by the simulation and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("capacity exceeded: {requested} probes requested, at most {max} supported")]
    Capacity { requested: usize, max: usize },

    /// Closed-form rates only hold on resonance.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    #[error("finite-difference step {0:e} is below the conditioning floor {min:e}", min = crate::analytics::MIN_FD_STEP)]
    IllConditionedStep(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
