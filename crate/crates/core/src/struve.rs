//! Classical Struve function H_ν(y) for real ν > −3/2 and y ≥ 0.
//!
//! Three routes: the power series for small y, the Poisson-type integral
//!
//! ```text
//! H_ν(y) = 2 (y/2)^ν / (√π Γ(ν + 1/2)) ∫₀¹ (1 − u²)^{ν−1/2} sin(yu) du,   ν > −1/2
//! ```
//!
//! for moderate y, and H_ν = Y_ν + K_ν (Hankel expansion of Y_ν plus the
//! Struve asymptotic series) for large y.

use crate::error::{domain, ensure_finite, Result};
use crate::quad::{integrate_finite, QuadratureSpec};
use crate::series::{check_tol, SeriesResult, DEFAULT_MAX_TERMS};
use crate::special::{gamma, log_gamma, recip_gamma_real};
use crate::wright::{eval_wright, WrightParams};
use std::f64::consts::PI;

const SERIES_LIMIT: f64 = 8.0;
const ASYMPTOTIC_FROM: f64 = 40.0;

/// H_ν(y).
pub fn struve_h(nu: f64, y: f64, tol: f64) -> Result<SeriesResult<f64>> {
    ensure_finite("nu", nu)?;
    ensure_finite("y", y)?;
    check_tol(tol)?;
    if y < 0.0 {
        return Err(domain(format!("struve_h needs y >= 0, got {y}")));
    }
    if nu + 1.5 <= 0.0 {
        return Err(domain(format!("struve_h needs nu > -3/2, got {nu}")));
    }
    if y <= SERIES_LIMIT || nu <= -0.5 {
        return struve_series(nu, y, tol);
    }
    if y >= ASYMPTOTIC_FROM {
        if let Some((r, scale)) = struve_asymptotic(nu, y) {
            if r.tail_estimate <= tol.max(1e-14) * scale {
                return Ok(r);
            }
        }
    }
    struve_integral(nu, y, tol)
}

/// (y/2)^{ν+1} Σ_k (−y²/4)^k / [Γ(k + 3/2) Γ(k + ν + 3/2)].
pub fn struve_series(nu: f64, y: f64, tol: f64) -> Result<SeriesResult<f64>> {
    if y == 0.0 {
        return Ok(SeriesResult {
            value: 0.0,
            terms_used: 1,
            tail_estimate: 0.0,
        });
    }
    let params = WrightParams::new(&[(1.0, 1.0)], &[(1.5, 1.0), (nu + 1.5, 1.0)])?;
    let half = y / 2.0;
    let inner = eval_wright(&params, -half * half, tol, DEFAULT_MAX_TERMS)?;
    Ok(inner.map_scale(half.powf(nu + 1.0)))
}

fn struve_integral(nu: f64, y: f64, tol: f64) -> Result<SeriesResult<f64>> {
    let e = nu - 0.5;
    let spec = QuadratureSpec {
        rel_tol: tol.max(1e-14),
        abs_tol: f64::MIN_POSITIVE,
        ..QuadratureSpec::finite(0.0, e)
    };
    let r = integrate_finite(
        |u: f64| Ok((1.0 + u).powf(e) * (y * u).sin()),
        0.0,
        1.0,
        &spec,
    )?;
    let factor = 2.0 * (nu * (y / 2.0).ln() - log_gamma(nu + 0.5)?).exp() / PI.sqrt();
    Ok(SeriesResult {
        value: factor * r.value,
        terms_used: r.evaluations,
        tail_estimate: factor * r.error_estimate,
    })
}

/// Y_ν(y) from the Hankel expansion and its truncation error.
fn bessel_y_hankel(nu: f64, y: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let (mut p, mut q) = (1.0f64, 0.0f64);
    let mut u = 1.0f64;
    let mut last = 1.0f64;
    for k in 1..200 {
        let kf = k as f64;
        let next = u * (mu - (2.0 * kf - 1.0).powi(2)) / (8.0 * kf * y);
        if next.abs() >= u.abs() && kf > nu.abs() {
            break;
        }
        u = next;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * u;
        } else {
            q += sign * u;
        }
        last = u.abs();
        if last < 1e-17 {
            break;
        }
    }
    let chi = y - (0.5 * nu + 0.25) * PI;
    let amp = (2.0 / (PI * y)).sqrt();
    (amp * (p * chi.sin() + q * chi.cos()), amp * last)
}

/// (1/π) Σ_k Γ(k + 1/2) / Γ(ν + 1/2 − k) · (y/2)^{ν−2k−1}, truncated at its smallest term.
fn struve_k_asymptotic(nu: f64, y: f64) -> Option<(f64, f64, usize)> {
    let h2 = (y / 2.0).powi(2);
    let mut term = gamma(0.5).ok()? * recip_gamma_real(nu + 0.5) * (y / 2.0).powf(nu - 1.0);
    let mut sum = 0.0f64;
    let mut terms = 0;
    for k in 0..500 {
        sum += term;
        terms += 1;
        let kf = k as f64;
        let next = term * (kf + 0.5) * (nu - 0.5 - kf) / h2;
        if next == 0.0 {
            return Some((sum / PI, 0.0, terms));
        }
        if next.abs() >= term.abs() {
            return Some((sum / PI, term.abs() / PI, terms));
        }
        if next.abs() < 1e-17 * sum.abs() {
            return Some((sum / PI, next.abs() / PI, terms));
        }
        term = next;
    }
    None
}

/// Y_ν + K_ν with the magnitude |Y_ν| + |K_ν| that its error is measured against.
fn struve_asymptotic(nu: f64, y: f64) -> Option<(SeriesResult<f64>, f64)> {
    let (yv, y_err) = bessel_y_hankel(nu, y);
    let (kv, k_err, terms) = struve_k_asymptotic(nu, y)?;
    let value = yv + kv;
    let scale = yv.abs() + kv.abs();
    let result = SeriesResult {
        value,
        terms_used: terms,
        tail_estimate: y_err + k_err + 4.0 * f64::EPSILON * scale,
    };
    Some((result, scale))
}
