use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{context}: no convergence after {iterations} iterations")]
    NonConvergence {
        context: &'static str,
        iterations: usize,
    },

    #[error("critical set admits no real (a, d); least-squares residual {residual:e}")]
    Unrealizable { residual: f64 },

    #[error("no delta in the schedule certifies an extremal map with {expected} zeros")]
    Exhausted { expected: usize },

    #[error("|delta| = {delta} is outside the regime |delta| < {bound}")]
    OutOfRegime { delta: f64, bound: f64 },

    #[error("singular zero at {location} (jacobian {jacobian:e})")]
    SingularZero { location: Complex64, jacobian: f64 },

    #[error("contour passes within {distance:e} of a zero or pole (margin {margin:e})")]
    ContourTooClose { distance: f64, margin: f64 },

    #[error("inconsistent valence report: {0}")]
    Inconsistent(String),

    #[error("orbit of infinity neither converged nor cycled within {iterations} iterations")]
    Inconclusive { iterations: usize },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid_input",
            Error::NonConvergence { .. } => "non_convergence",
            Error::Unrealizable { .. } => "unrealizable",
            Error::Exhausted { .. } => "exhausted",
            Error::OutOfRegime { .. } => "out_of_regime",
            Error::SingularZero { .. } => "singular_zero",
            Error::ContourTooClose { .. } => "contour_too_close",
            Error::Inconsistent(_) => "inconsistent",
            Error::Inconclusive { .. } => "inconclusive",
        }
    }
}
