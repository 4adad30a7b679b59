use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function} is singular at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("{0}")]
    Domain(String),

    #[error("kappa = {kappa} <= -1")]
    ConvergenceViolation { kappa: f64 },

    #[error("|z| = {modulus} is outside the disk of radius {radius}")]
    OutsideRadius { modulus: f64, radius: f64 },

    #[error("stopping rule not met after {terms} terms")]
    NonConvergence { terms: usize },

    #[error("upper parameter {index} hits a gamma pole at k = {k}")]
    NumeratorPole { index: usize, k: usize },

    #[error("{0}")]
    EvaluationUnstable(String),

    #[error("{subdivisions} panels, error estimate {error_estimate:e}")]
    MaxSubdivisions {
        subdivisions: usize,
        error_estimate: f64,
    },

    #[error("tail on [{truncation}, {doubled}] is {tail:e}")]
    TruncationUnstable {
        truncation: f64,
        doubled: f64,
        tail: f64,
    },

    #[error("successive differences {previous:e} -> {last:e}")]
    ExtrapolationDiverged { previous: f64, last: f64 },

    #[error("non-finite integrand value at t = {0}")]
    NonFiniteIntegrand(f64),

    #[error("{0}")]
    InvalidCase(String),
}

impl Error {
    /// Short machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "pole",
            Error::Domain(_) => "domain",
            Error::ConvergenceViolation { .. } | Error::OutsideRadius { .. } => {
                "convergence_violation"
            }
            Error::NonConvergence { .. } => "non_convergence",
            Error::NumeratorPole { .. } => "numerator_pole",
            Error::EvaluationUnstable(_) => "evaluation_unstable",
            Error::MaxSubdivisions { .. } => "max_subdivisions",
            Error::TruncationUnstable { .. } => "truncation_unstable",
            Error::ExtrapolationDiverged { .. } => "extrapolation_diverged",
            Error::NonFiniteIntegrand(_) => "non_finite_integrand",
            Error::InvalidCase(_) => "invalid_case",
        }
    }

    /// Errors caused by the caller's input rather than by a numerical failure.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. }
                | Error::Domain(_)
                | Error::ConvergenceViolation { .. }
                | Error::OutsideRadius { .. }
                | Error::NumeratorPole { .. }
                | Error::InvalidCase(_)
        )
    }
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn ensure_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("{name} must be finite, got {v}")))
    }
}
