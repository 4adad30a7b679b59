use super::adaptive::{adaptive, Weighted};
use super::{QuadratureResult, QuadratureSpec};
use crate::error::{domain, ensure_finite, Error, Result};
use crate::value::Value;
use std::f64::consts::PI;

const ENVELOPE_SAMPLES: usize = 32;
const MAX_DOUBLINGS: usize = 60;
const MAX_INITIAL_PANELS: usize = 8192;

/// Smallest T (in doublings of `start`) with sup_{[T,2T]} |t^A f(t)| / δ below `bound`.
fn envelope_truncation<T: Value>(
    f: &mut impl FnMut(f64) -> Result<T>,
    left: f64,
    decay: f64,
    start: f64,
    bound: f64,
    evaluations: &mut usize,
) -> Result<f64> {
    let mut t0 = start;
    for _ in 0..MAX_DOUBLINGS {
        let mut peak = 0.0f64;
        for j in 0..=ENVELOPE_SAMPLES {
            let t = t0 * (1.0 + j as f64 / ENVELOPE_SAMPLES as f64);
            let y = f(t)?;
            if !y.is_finite_value() {
                return Err(Error::NonFiniteIntegrand(t));
            }
            peak = peak.max(y.modulus() * t.powf(left));
        }
        *evaluations += ENVELOPE_SAMPLES + 1;
        if peak / decay < bound {
            return Ok(t0);
        }
        t0 *= 2.0;
    }
    Err(Error::TruncationUnstable {
        truncation: t0 / 2.0,
        doubled: t0,
        tail: f64::INFINITY,
    })
}

fn semi_infinite_core<T: Value>(
    f: &mut impl FnMut(f64) -> Result<T>,
    decay: f64,
    frequency: Option<f64>,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult<T>> {
    spec.validate()?;
    ensure_finite("decay rate", decay)?;
    if !(decay > 0.0) {
        return Err(domain(format!(
            "decay rate hint must be positive, got {decay}"
        )));
    }
    let left = spec.endpoint_exponents.0;
    let period = frequency.map(|w| 2.0 * PI / w.abs());
    let mut evaluations = 0;
    let envelope_bound = spec.abs_tol / 10.0;
    let truncation = match spec.truncation_point {
        Some(t) => t,
        None => {
            let start = period.map_or(1.0 / decay, |p| p.max(1.0 / decay));
            envelope_truncation(f, left, decay, start, envelope_bound, &mut evaluations)?
        }
    };
    let panel_width = match period {
        Some(p) => p,
        None => 4.0 / decay,
    };
    let panels = ((truncation / panel_width).ceil() as usize).clamp(1, MAX_INITIAL_PANELS);
    let weighted = Weighted {
        a: 0.0,
        b: truncation,
        left,
        right: 0.0,
    };
    let main = adaptive(f, &weighted, (0.0, truncation), spec, panels)?;
    let doubled = 2.0 * truncation;
    let tail_weight = Weighted {
        a: 0.0,
        b: doubled,
        left,
        right: 0.0,
    };
    let tail = adaptive(f, &tail_weight, (truncation, doubled), spec, panels)?;
    let allowed = spec.abs_tol.max(spec.rel_tol * main.value.modulus());
    if tail.value.modulus() > allowed {
        return Err(Error::TruncationUnstable {
            truncation,
            doubled,
            tail: tail.value.modulus(),
        });
    }
    Ok(QuadratureResult {
        value: main.value + tail.value,
        error_estimate: main.error_estimate + tail.error_estimate + envelope_bound,
        evaluations: evaluations + main.evaluations + tail.evaluations,
        truncation_used: Some(truncation),
    })
}

/// ∫₀^∞ t^A f(t) dt for f decaying at least like e^{−δt}, δ ≥ `decay_rate_hint`,
/// with A = `spec.endpoint_exponents.0`.
pub fn integrate_semi_infinite<T: Value>(
    mut f: impl FnMut(f64) -> Result<T>,
    decay_rate_hint: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult<T>> {
    semi_infinite_core(&mut f, decay_rate_hint, None, spec)
}

/// As [`integrate_semi_infinite`], with the initial panels sized to one period
/// of an oscillation at `frequency`.
pub fn integrate_semi_infinite_oscillating<T: Value>(
    mut f: impl FnMut(f64) -> Result<T>,
    decay_rate_hint: f64,
    frequency: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult<T>> {
    ensure_finite("frequency", frequency)?;
    if frequency == 0.0 {
        return Err(domain("frequency must be nonzero"));
    }
    semi_infinite_core(&mut f, decay_rate_hint, Some(frequency), spec)
}
