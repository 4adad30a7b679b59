//! Left-hand sides: the defining transform integrals by direct quadrature.
//!
//! Every integrand is written as t^{A}·(smooth factor) with the singular or
//! vanishing power t^{A} absorbed into a Gauss–Jacobi rule. The GTSF enters
//! through Ĝ(t) = GTSF(√x t)/t^{p+1}, which is regular at t = 0.

use super::case::{Transform, TransformCase};
use crate::error::Result;
use crate::gtsf::{eval_gtsf, inner_series, GtsfParams};
use crate::kernels::{bessel_k, whittaker_w};
use crate::quad::{
    integrate_finite, integrate_regularized_oscillatory, integrate_semi_infinite, QuadratureSpec,
};
use num_complex::Complex64;

const SERIES_TOL: f64 = 1e-15;
const REL_TOL: f64 = 1e-12;
const KERNEL_REL_TOL: f64 = 1e-10;
const ABS_TOL: f64 = 1e-16;

/// A left-hand side with its quadrature error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LhsValue {
    pub value: Complex64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Ĝ(t) = GTSF(√x t)/t^{p+1}.
#[derive(Debug, Clone, Copy)]
pub struct ScaledGtsf {
    params: GtsfParams,
    x: f64,
    lead: f64,
}

impl ScaledGtsf {
    pub fn new(params: GtsfParams, x: f64) -> Self {
        ScaledGtsf {
            params,
            x,
            lead: (x.sqrt() / 2.0).powf(params.p + 1.0),
        }
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        if t <= 1.0 {
            let w = -self.params.c * self.x * t * t / 4.0;
            Ok(self.lead * inner_series(&self.params, w, SERIES_TOL)?.value)
        } else {
            let g = eval_gtsf(&self.params, self.x.sqrt() * t, SERIES_TOL)?.value;
            Ok(g / t.powf(self.params.p + 1.0))
        }
    }
}

fn real(r: crate::quad::QuadratureResult<f64>) -> LhsValue {
    LhsValue {
        value: Complex64::new(r.value, 0.0),
        error_estimate: r.error_estimate,
        evaluations: r.evaluations,
    }
}

/// The defining integral of `case`, evaluated by quadrature.
///
/// For the fractional Fourier case this is the ε-regularized one-sided
/// integral lim ∫₀^∞ e^{(iΩ−ε)t} GTSF(√x t) dt, Ω = ω^{1/order}.
pub fn lhs(case: &TransformCase) -> Result<LhsValue> {
    case.validate()?;
    let g = &case.gtsf;
    let p = g.p;
    let ghat = ScaledGtsf::new(*g, case.x);
    let growth = case.growth_rate();
    match case.transform {
        Transform::Euler { r, s } => {
            // t^{r−1}(1−t)^{s−1} t^{p+1} Ĝ(t)
            let spec = QuadratureSpec::finite(r + p, s - 1.0).with_tolerances(REL_TOL, ABS_TOL);
            integrate_finite(|t| ghat.eval(t), 0.0, 1.0, &spec).map(real)
        }
        Transform::Laplace { s } => {
            // e^{−st} t^{p+1} Ĝ(t)
            let spec = QuadratureSpec::semi_infinite(p + 1.0).with_tolerances(REL_TOL, ABS_TOL);
            integrate_semi_infinite(|t| Ok((-s * t).exp() * ghat.eval(t)?), s - growth, &spec)
                .map(real)
        }
        Transform::Whittaker { zeta, tau, omega } => {
            // t^{ζ−1} e^{−t/2} W_{τ,ω}(t) t^{p+1} Ĝ(t), W ~ t^{1/2−|ω|} at 0
            let shift = omega.abs() - 0.5;
            let spec = QuadratureSpec::semi_infinite(zeta + p - shift)
                .with_tolerances(KERNEL_REL_TOL, ABS_TOL);
            integrate_semi_infinite(
                |t| {
                    let w = whittaker_w(tau, omega, t)?.value;
                    Ok((shift * t.ln() - t / 2.0).exp() * w * ghat.eval(t)?)
                },
                1.0 - growth,
                &spec,
            )
            .map(real)
        }
        Transform::KTransform { rho, nu, omega } => {
            // t^{ρ−1} K_ν(ωt) t^{p+1} Ĝ(t), K_ν ~ t^{−|ν|} at 0
            let shift = nu.abs();
            let spec = QuadratureSpec::semi_infinite(rho + p - shift)
                .with_tolerances(KERNEL_REL_TOL, ABS_TOL);
            integrate_semi_infinite(
                |t| {
                    let k = bessel_k(nu, omega * t)?.value;
                    Ok(t.powf(shift) * k * ghat.eval(t)?)
                },
                omega - growth,
                &spec,
            )
            .map(real)
        }
        Transform::FracFourier { order, omega } => {
            let frequency = omega.powf(1.0 / order);
            let spec =
                QuadratureSpec::regularized_oscillatory(p + 1.0).with_tolerances(REL_TOL, ABS_TOL);
            let r = integrate_regularized_oscillatory(|t| ghat.eval(t), frequency, &spec)?;
            Ok(LhsValue {
                value: r.value,
                error_estimate: r.error_estimate,
                evaluations: r.evaluations,
            })
        }
    }
}
