//! The generalized Galué-type Struve function
//!
//! ```text
//! aW_{p,b,c}^{λ,μ,ξ}(z) = Σ_k (−c)^k / [Γ(λk + μ) Γ(ak + p/ξ + (b+2)/2)] · (z/2)^{2k+p+1}
//! ```
//!
//! evaluated as (z/2)^{p+1} · ₁Ψ₂[(1,1); (μ,λ), (p/ξ + (b+2)/2, a) | −cz²/4].
//! With λ = a = ξ = 1 and μ = 3/2 it reduces to H_{p,b,c}; for c > 0 that
//! reduction is a rescaled classical Struve function, which is used for large
//! arguments where the alternating series cancels.

use crate::error::{domain, ensure_finite, Result};
use crate::series::{check_tol, SeriesResult, DEFAULT_MAX_TERMS};
use crate::struve::struve_h;
use crate::wright::{eval_wright, WrightParams};
use serde::{Deserialize, Serialize};

/// Parameters (a, p, b, c, λ, μ, ξ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GtsfParams {
    pub a: u32,
    pub p: f64,
    pub b: f64,
    pub c: f64,
    pub lambda: f64,
    pub mu: f64,
    pub xi: f64,
}

/// Above this value of √c·z the reduced series is replaced by the Struve route.
const STRUVE_SWITCH: f64 = 8.0;

impl GtsfParams {
    pub fn new(a: u32, p: f64, b: f64, c: f64, lambda: f64, mu: f64, xi: f64) -> Result<Self> {
        let params = GtsfParams {
            a,
            p,
            b,
            c,
            lambda,
            mu,
            xi,
        };
        params.validate()?;
        Ok(params)
    }

    /// λ = a = ξ = 1, μ = 3/2: the H_{p,b,c} reduction.
    pub fn reduced(p: f64, b: f64, c: f64) -> Self {
        GtsfParams {
            a: 1,
            p,
            b,
            c,
            lambda: 1.0,
            mu: 1.5,
            xi: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("p", self.p),
            ("b", self.b),
            ("c", self.c),
            ("lambda", self.lambda),
            ("mu", self.mu),
            ("xi", self.xi),
        ] {
            ensure_finite(name, v)?;
        }
        if self.a == 0 {
            return Err(domain("a must be a positive integer"));
        }
        if self.lambda <= 0.0 {
            return Err(domain(format!(
                "lambda must be positive, got {}",
                self.lambda
            )));
        }
        if self.xi <= 0.0 {
            return Err(domain(format!("xi must be positive, got {}", self.xi)));
        }
        Ok(())
    }

    pub fn is_reduced(&self) -> bool {
        self.a == 1 && self.lambda == 1.0 && self.mu == 1.5 && self.xi == 1.0
    }

    /// p/ξ + (b+2)/2, the offset of the second denominator gamma.
    pub fn second_offset(&self) -> f64 {
        self.p / self.xi + (self.b + 2.0) / 2.0
    }

    /// The ₁Ψ₂ parameter set of the inner series.
    pub fn inner_wright(&self) -> WrightParams {
        WrightParams::new(
            &[(1.0, 1.0)],
            &[
                (self.mu, self.lambda),
                (self.second_offset(), self.a as f64),
            ],
        )
        .expect("validated GTSF parameters give nonzero scales")
    }
}

/// Σ_k w^k / [Γ(λk + μ) Γ(ak + p/ξ + (b+2)/2)], the GTSF without its leading power.
pub fn inner_series(params: &GtsfParams, w: f64, tol: f64) -> Result<SeriesResult<f64>> {
    params.validate()?;
    eval_wright(&params.inner_wright(), w, tol, DEFAULT_MAX_TERMS)
}

/// The GTSF at z ≥ 0.
pub fn eval_gtsf(params: &GtsfParams, z: f64, tol: f64) -> Result<SeriesResult<f64>> {
    params.validate()?;
    check_tol(tol)?;
    ensure_finite("z", z)?;
    if z < 0.0 {
        return Err(domain(format!("z must be non-negative, got {z}")));
    }
    if z == 0.0 {
        if params.p <= -1.0 {
            return Err(domain("z = 0 requires p > -1"));
        }
        return Ok(SeriesResult {
            value: 0.0,
            terms_used: 1,
            tail_estimate: 0.0,
        });
    }
    if params.is_reduced() && params.c > 0.0 {
        let y = params.c.sqrt() * z;
        let nu = params.p + params.b / 2.0 - 0.5;
        if y > STRUVE_SWITCH && nu > -0.5 {
            return reduced_via_struve(params, y, nu, tol);
        }
    }
    let half = z / 2.0;
    let inner = inner_series(params, -params.c * half * half, tol)?;
    Ok(inner.map_scale(half.powf(params.p + 1.0)))
}

/// H_{p,b,c}(z) = c^{−(p+1)/2} (y/2)^{p−ν} H_ν(y) with y = √c·z, ν = p + b/2 − 1/2.
fn reduced_via_struve(params: &GtsfParams, y: f64, nu: f64, tol: f64) -> Result<SeriesResult<f64>> {
    let h = struve_h(nu, y, tol)?;
    let factor = params.c.powf(-(params.p + 1.0) / 2.0) * (y / 2.0).powf(params.p - nu);
    Ok(h.map_scale(factor))
}

/// H_{p,b,c}(z): the GTSF at λ = a = ξ = 1, μ = 3/2.
pub fn eval_h_pbc(p: f64, b: f64, c: f64, z: f64, tol: f64) -> Result<SeriesResult<f64>> {
    eval_gtsf(&GtsfParams::reduced(p, b, c), z, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::special::gamma;

    /// H₀(1), Abramowitz & Stegun table 12.1.
    const STRUVE_H0_AT_1: f64 = 0.568_656_627_048_287_9;

    /// Independent direct sum of the H_{p,b,c} series with a recursive term ratio.
    fn direct_h_pbc(p: f64, b: f64, c: f64, z: f64) -> f64 {
        let nu1 = p + b / 2.0 + 1.0;
        let mut term = (z / 2.0).powf(p + 1.0) / (gamma(1.5).unwrap() * gamma(nu1).unwrap());
        let mut sum = 0.0;
        let q = -c * z * z / 4.0;
        for k in 0..200 {
            sum += term;
            let kf = k as f64;
            term *= q / ((kf + 1.5) * (kf + nu1));
        }
        sum
    }

    #[test]
    fn struve_h0_at_one() {
        let params = GtsfParams::new(1, 0.0, 1.0, 1.0, 1.0, 1.5, 1.0).unwrap();
        let r = eval_gtsf(&params, 1.0, 1e-12).unwrap();
        assert!((r.value - STRUVE_H0_AT_1).abs() <= 1e-14);
        assert!(((r.value - direct_h_pbc(0.0, 1.0, 1.0, 1.0)) / r.value).abs() <= 1e-13);
    }

    #[test]
    fn modified_struve_exceeds_struve() {
        let l0 = eval_h_pbc(0.0, 1.0, -1.0, 1.0, 1e-12).unwrap().value;
        let h0 = eval_h_pbc(0.0, 1.0, 1.0, 1.0, 1e-12).unwrap().value;
        // L₀(1), Abramowitz & Stegun table 12.1
        assert!((l0 - 0.710_243_185_937_891).abs() < 1e-13);
        assert!(l0 > h0 && h0 > 0.0);
    }

    #[test]
    fn zero_argument() {
        let r = eval_h_pbc(0.3, 1.0, 1.0, 0.0, 1e-12).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(eval_h_pbc(-1.5, 1.0, 1.0, 0.0, 1e-12).is_err());
    }

    #[test]
    fn negative_argument_rejected() {
        assert!(matches!(
            eval_h_pbc(0.0, 1.0, 1.0, -1.0, 1e-12),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(GtsfParams::new(0, 0.0, 1.0, 1.0, 1.0, 1.5, 1.0).is_err());
        assert!(GtsfParams::new(1, 0.0, 1.0, 1.0, 0.0, 1.5, 1.0).is_err());
        assert!(GtsfParams::new(1, 0.0, 1.0, 1.0, 1.0, 1.5, -1.0).is_err());
        assert!(GtsfParams::new(1, f64::NAN, 1.0, 1.0, 1.0, 1.5, 1.0).is_err());
    }

    #[test]
    fn reduction_is_the_same_path() {
        let params = GtsfParams::new(1, 0.7, -0.4, 1.3, 1.0, 1.5, 1.0).unwrap();
        let a = eval_gtsf(&params, 2.2, 1e-12).unwrap();
        let b = eval_h_pbc(0.7, -0.4, 1.3, 2.2, 1e-12).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }

    #[test]
    fn struve_route_matches_series_near_switch() {
        // just above the switch the series still has ~13 good digits
        for &(p, b) in &[(0.0, 1.0), (0.5, 1.0), (1.5, 0.4)] {
            let params = GtsfParams::reduced(p, b, 1.0);
            let z = 8.5;
            let via_struve = eval_gtsf(&params, z, 1e-13).unwrap().value;
            let series =
                inner_series(&params, -z * z / 4.0, 1e-14).unwrap().value * (z / 2.0).powf(p + 1.0);
            assert!(
                ((via_struve - series) / series).abs() < 1e-10,
                "p={p} b={b}: {via_struve} vs {series}"
            );
        }
    }

    #[test]
    fn sign_flip_of_c_negates_inner_argument() {
        let plus = GtsfParams::new(2, 0.4, 0.3, 1.2, 2.0, 1.2, 1.5).unwrap();
        let minus = GtsfParams { c: -1.2, ..plus };
        let z = 1.7;
        let w = 1.2 * z * z / 4.0;
        let direct = inner_series(&minus, w, 1e-14).unwrap().value;
        let flipped = eval_gtsf(&minus, z, 1e-14).unwrap().value / (z / 2.0).powf(1.4);
        assert!(((direct - flipped) / direct).abs() < 1e-13);
        let neg = inner_series(&plus, -w, 1e-14).unwrap().value;
        let gp = eval_gtsf(&plus, z, 1e-14).unwrap().value / (z / 2.0).powf(1.4);
        assert!(((neg - gp) / neg).abs() < 1e-13);
    }
}
