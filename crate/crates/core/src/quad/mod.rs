//! Adaptive quadrature for finite, semi-infinite and ε-regularized
//! oscillatory integrals.
//!
//! Integrands are `FnMut(f64) -> Result<T>` so that special-function failures
//! propagate out of the integral instead of turning into NaN.

mod adaptive;
mod oscillatory;
pub mod rules;
mod semi_infinite;

pub use adaptive::integrate_finite;
pub use oscillatory::integrate_regularized_oscillatory;
pub use rules::{gauss_jacobi, gauss_legendre, GaussRule};
pub use semi_infinite::{integrate_semi_infinite, integrate_semi_infinite_oscillating};

use crate::error::{domain, ensure_finite, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadKind {
    Finite,
    SemiInfinite,
    RegularizedOscillatory,
}

/// Controls for one integral.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub kind: QuadKind,
    /// Powers of (t − a) and (b − t) absorbed into the rule at the two ends.
    /// On semi-infinite ranges only the first one is used.
    pub endpoint_exponents: (f64, f64),
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Number of panel bisections allowed after the initial partition.
    pub max_subdivisions: usize,
    /// `None` picks the truncation point from the integrand envelope.
    pub truncation_point: Option<f64>,
    pub regularization_eps_sequence: Vec<f64>,
    /// Gauss points per panel.
    pub points: usize,
}

pub const DEFAULT_EPS_SEQUENCE: [f64; 6] = [0.16, 0.08, 0.04, 0.02, 0.01, 0.005];

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            kind: QuadKind::Finite,
            endpoint_exponents: (0.0, 0.0),
            rel_tol: 1e-12,
            abs_tol: 1e-14,
            max_subdivisions: 4000,
            truncation_point: None,
            regularization_eps_sequence: DEFAULT_EPS_SEQUENCE.to_vec(),
            points: 20,
        }
    }
}

impl QuadratureSpec {
    pub fn finite(left: f64, right: f64) -> Self {
        QuadratureSpec {
            endpoint_exponents: (left, right),
            ..Self::default()
        }
    }

    pub fn semi_infinite(left: f64) -> Self {
        QuadratureSpec {
            kind: QuadKind::SemiInfinite,
            endpoint_exponents: (left, 0.0),
            ..Self::default()
        }
    }

    pub fn regularized_oscillatory(left: f64) -> Self {
        QuadratureSpec {
            kind: QuadKind::RegularizedOscillatory,
            endpoint_exponents: (left, 0.0),
            ..Self::default()
        }
    }

    pub fn with_tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(domain("rel_tol and abs_tol must be positive"));
        }
        if self.max_subdivisions < 1 {
            return Err(domain("max_subdivisions must be at least 1"));
        }
        if self.points < 1 {
            return Err(domain("points must be at least 1"));
        }
        let (l, r) = self.endpoint_exponents;
        ensure_finite("endpoint exponent", l)?;
        ensure_finite("endpoint exponent", r)?;
        if l <= -1.0 || (self.kind == QuadKind::Finite && r <= -1.0) {
            return Err(domain(format!(
                "endpoint exponents must exceed -1, got ({l}, {r})"
            )));
        }
        if let Some(t) = self.truncation_point {
            if !(t > 0.0 && t.is_finite()) {
                return Err(domain(format!(
                    "truncation point must be positive, got {t}"
                )));
            }
        }
        Ok(())
    }
}

/// Value and bookkeeping of one integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult<T> {
    pub value: T,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub truncation_used: Option<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::default().validate().is_ok());
        assert!(QuadratureSpec::finite(-1.0, 0.0).validate().is_err());
        assert!(QuadratureSpec::default()
            .with_tolerances(0.0, 1e-3)
            .validate()
            .is_err());
        let mut s = QuadratureSpec {
            max_subdivisions: 0,
            ..QuadratureSpec::default()
        };
        assert!(s.validate().is_err());
        s = QuadratureSpec::semi_infinite(0.5);
        s.truncation_point = Some(-2.0);
        assert!(s.validate().is_err());
    }
}
