use crate::error::{ensure_finite, Error, Result};
use crate::series::{check_tol, SeriesResult, SeriesSum, DEFAULT_MAX_TERMS};
use crate::special::is_nonpositive_integer;

/// Kummer's ₁F₁(α; γ; z) = Σ_k (α)_k / (γ)_k · z^k / k!.
pub fn kummer_1f1(alpha: f64, gamma: f64, z: f64, tol: f64) -> Result<SeriesResult<f64>> {
    ensure_finite("alpha", alpha)?;
    ensure_finite("gamma", gamma)?;
    ensure_finite("z", z)?;
    check_tol(tol)?;
    if is_nonpositive_integer(gamma) {
        return Err(Error::Pole {
            function: "kummer_1f1",
            at: gamma,
        });
    }
    let burn_in = [alpha, gamma]
        .iter()
        .filter(|&&v| v < 0.0)
        .map(|&v| (-v).ceil() as usize + 1)
        .max()
        .unwrap_or(0);
    let mut acc = SeriesSum::new(tol, burn_in);
    let mut term = 1.0f64;
    let mut k = 0usize;
    while acc.terms() < DEFAULT_MAX_TERMS {
        let err = 2.0 * f64::EPSILON * (k as f64 + 1.0) * term.abs();
        if acc.push(term, err) {
            return Ok(acc.finish());
        }
        let kf = k as f64;
        term *= (alpha + kf) / (gamma + kf) * z / (kf + 1.0);
        if !term.is_finite() {
            return Err(Error::EvaluationUnstable(format!(
                "1F1 term overflow at k = {}",
                k + 1
            )));
        }
        k += 1;
    }
    Err(acc.non_convergence())
}
