use super::semi_infinite::integrate_semi_infinite_oscillating;
use super::{QuadratureResult, QuadratureSpec};
use crate::error::{domain, ensure_finite, Error, Result};
use crate::value::Value;
use num_complex::Complex64;

/// Neville extrapolation to ε = 0. Returns the successive extrapolants using
/// the first 1, 2, … points.
fn neville_at_zero(eps: &[f64], values: &[Complex64]) -> Vec<Complex64> {
    let n = eps.len();
    let mut table = values.to_vec();
    let mut diagonal = vec![values[0]];
    // table[i] holds P_{i-m..i}(0) after round m
    for m in 1..n {
        for i in (m..n).rev() {
            let (xa, xb) = (eps[i - m], eps[i]);
            table[i] = (table[i] * xa - table[i - 1] * xb) / (xa - xb);
        }
        diagonal.push(table[m]);
    }
    diagonal
}

/// Σ_j |ℓ_j(0)| for the Lagrange basis on `eps`.
fn lebesgue_at_zero(eps: &[f64]) -> f64 {
    (0..eps.len())
        .map(|j| {
            eps.iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .map(|(_, &e)| (e / (e - eps[j])).abs())
                .product::<f64>()
        })
        .sum()
}

/// lim_{ε→0⁺} ∫₀^∞ t^A e^{(iΩ − ε)t} g(t) dt, A = `spec.endpoint_exponents.0`,
/// by quadrature at each ε of `spec.regularization_eps_sequence` followed by
/// polynomial extrapolation in ε.
pub fn integrate_regularized_oscillatory<T: Value>(
    mut g: impl FnMut(f64) -> Result<T>,
    frequency: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult<Complex64>> {
    spec.validate()?;
    ensure_finite("frequency", frequency)?;
    if frequency == 0.0 {
        return Err(domain("frequency must be nonzero"));
    }
    let eps = &spec.regularization_eps_sequence;
    if eps.len() < 2 {
        return Err(domain("regularization needs at least two epsilon values"));
    }
    for (i, &e) in eps.iter().enumerate() {
        if !(e > 0.0 && e.is_finite()) || eps[..i].contains(&e) {
            return Err(domain(format!(
                "epsilon values must be distinct and positive, got {e}"
            )));
        }
    }
    let mut values = Vec::with_capacity(eps.len());
    let mut quad_error = 0.0f64;
    let mut evaluations = 0;
    let mut truncation = 0.0f64;
    for &e in eps {
        let r = integrate_semi_infinite_oscillating(
            |t: f64| Ok(g(t)?.into_complex() * Complex64::new(-e * t, frequency * t).exp()),
            e,
            frequency,
            spec,
        )?;
        values.push(r.value);
        quad_error = quad_error.max(r.error_estimate);
        evaluations += r.evaluations;
        truncation = truncation.max(r.truncation_used.unwrap_or(0.0));
    }
    let extrapolants = neville_at_zero(eps, &values);
    let n = extrapolants.len();
    let last = (extrapolants[n - 1] - extrapolants[n - 2]).norm();
    let value = extrapolants[n - 1];
    let noise =
        lebesgue_at_zero(eps) * quad_error + 10.0 * spec.abs_tol.max(spec.rel_tol * value.norm());
    if n >= 3 {
        let previous = (extrapolants[n - 2] - extrapolants[n - 3]).norm();
        if last > previous && last > noise {
            return Err(Error::ExtrapolationDiverged { previous, last });
        }
    }
    Ok(QuadratureResult {
        value,
        error_estimate: last + lebesgue_at_zero(eps) * quad_error,
        evaluations,
        truncation_used: Some(truncation),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neville_reproduces_polynomials() {
        let eps = [0.4, 0.2, 0.1, 0.05];
        let vals: Vec<Complex64> = eps
            .iter()
            .map(|&e: &f64| Complex64::new(1.0 + 2.0 * e - 3.0 * e * e + e.powi(3), e))
            .collect();
        let ex = neville_at_zero(&eps, &vals);
        assert!((ex[3] - Complex64::new(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn constant_amplitude() {
        let r = integrate_regularized_oscillatory(
            |_| Ok(1.0),
            1.0,
            &QuadratureSpec::regularized_oscillatory(0.0),
        )
        .unwrap();
        assert!(
            (r.value - Complex64::new(0.0, 1.0)).norm() < 1e-8,
            "{}",
            r.value
        );
    }

    #[test]
    fn linear_amplitude() {
        let r = integrate_regularized_oscillatory(
            |t: f64| Ok(t),
            1.0,
            &QuadratureSpec::regularized_oscillatory(0.0),
        )
        .unwrap();
        assert!(
            (r.value - Complex64::new(-1.0, 0.0)).norm() < 1e-8,
            "{}",
            r.value
        );
    }

    #[test]
    fn quadratic_amplitude() {
        // Γ(3)(−iω)^{−3}
        let w = 1.3;
        let r = integrate_regularized_oscillatory(
            |t: f64| Ok(t * t),
            w,
            &QuadratureSpec::regularized_oscillatory(0.0),
        )
        .unwrap();
        let expect = 2.0 * Complex64::new(0.0, -w).powi(-3);
        assert!(
            ((r.value - expect) / expect.norm()).norm() < 1e-6,
            "{} vs {}",
            r.value,
            expect
        );
    }

    #[test]
    fn rejects_degenerate_sequences() {
        let mut spec = QuadratureSpec::regularized_oscillatory(0.0);
        spec.regularization_eps_sequence = vec![0.1];
        assert!(integrate_regularized_oscillatory(|_| Ok(1.0), 1.0, &spec).is_err());
        spec.regularization_eps_sequence = vec![0.1, 0.1];
        assert!(integrate_regularized_oscillatory(|_| Ok(1.0), 1.0, &spec).is_err());
        assert!(integrate_regularized_oscillatory(
            |_| Ok(1.0),
            0.0,
            &QuadratureSpec::regularized_oscillatory(0.0)
        )
        .is_err());
    }
}
