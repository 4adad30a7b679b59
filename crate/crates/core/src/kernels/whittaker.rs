use super::kummer::kummer_1f1;
use crate::error::{domain, ensure_finite, Error, Result};
use crate::quad::{integrate_semi_infinite, QuadratureSpec};
use crate::series::SeriesResult;
use crate::special::{is_nonpositive_integer, log_gamma, log_gamma_sign, recip_gamma_real};

const KUMMER_TOL: f64 = 1e-15;
/// Half-width of the window around half-integer ω handled by the offset fallback.
const OFFSET: f64 = 1e-6;
const OFFSET_AGREEMENT: f64 = 1e-4;
/// Above this z, W with 1/2 + |ω| − τ > 0 comes from its Laplace-type integral.
const INTEGRAL_FROM: f64 = 8.0;
const MAX_CANCELLATION: f64 = 1e8;

/// The index pair (τ, ω) of M_{τ,ω} and W_{τ,ω}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerIndices {
    pub tau: f64,
    pub omega: f64,
}

impl WhittakerIndices {
    pub fn m(&self, z: f64) -> Result<SeriesResult<f64>> {
        whittaker_m(self.tau, self.omega, z)
    }

    pub fn w(&self, z: f64) -> Result<SeriesResult<f64>> {
        whittaker_w(self.tau, self.omega, z)
    }
}

fn check_point(z: f64) -> Result<()> {
    ensure_finite("z", z)?;
    if z > 0.0 {
        Ok(())
    } else {
        Err(domain(format!("Whittaker functions need z > 0, got {z}")))
    }
}

/// M_{τ,ω}(z) = z^{1/2+ω} e^{−z/2} ₁F₁(1/2 + ω − τ; 2ω + 1; z).
pub fn whittaker_m(tau: f64, omega: f64, z: f64) -> Result<SeriesResult<f64>> {
    ensure_finite("tau", tau)?;
    ensure_finite("omega", omega)?;
    check_point(z)?;
    if is_nonpositive_integer(2.0 * omega + 1.0) {
        return Err(Error::Pole {
            function: "whittaker_m",
            at: omega,
        });
    }
    let f = kummer_1f1(0.5 + omega - tau, 2.0 * omega + 1.0, z, KUMMER_TOL)?;
    let factor = ((0.5 + omega) * z.ln() - 0.5 * z).exp();
    Ok(f.map_scale(factor))
}

/// W_{τ,ω}(z) for z > 0.
///
/// Uses Γ(−2ω)/Γ(1/2−τ−ω) M_{τ,ω} + Γ(2ω)/Γ(1/2−τ+ω) M_{τ,−ω} for small z and
/// z^τ e^{−z/2}/Γ(β) ∫₀^∞ e^{−u} u^{β−1} (1 + u/z)^{τ+|ω|−1/2} du,
/// β = 1/2 + |ω| − τ > 0, for large z. When 2ω is within 2·10⁻⁶ of an integer
/// the combination is evaluated on both sides of the half-integer and
/// interpolated.
pub fn whittaker_w(tau: f64, omega: f64, z: f64) -> Result<SeriesResult<f64>> {
    ensure_finite("tau", tau)?;
    ensure_finite("omega", omega)?;
    check_point(z)?;
    let omega = omega.abs();
    let beta = 0.5 + omega - tau;
    if z > INTEGRAL_FROM && beta > 0.0 {
        return w_integral(tau, omega, beta, z);
    }
    let n = (2.0 * omega).round();
    if (omega - n / 2.0).abs() <= OFFSET {
        let (lo, hi) = (n / 2.0 - OFFSET, n / 2.0 + OFFSET);
        let w_lo = w_combination(tau, lo.abs(), z)?;
        let w_hi = w_combination(tau, hi, z)?;
        let scale = 0.5 * (w_lo.value.abs() + w_hi.value.abs());
        if (w_hi.value - w_lo.value).abs() > OFFSET_AGREEMENT * scale {
            return Err(Error::EvaluationUnstable(format!(
                "offset evaluations of W at omega = {} disagree: {} vs {}",
                n / 2.0,
                w_lo.value,
                w_hi.value
            )));
        }
        let theta = (omega - lo) / (hi - lo);
        return Ok(SeriesResult {
            value: w_lo.value + theta * (w_hi.value - w_lo.value),
            terms_used: w_lo.terms_used + w_hi.terms_used,
            tail_estimate: w_lo.tail_estimate.max(w_hi.tail_estimate),
        });
    }
    w_combination(tau, omega, z)
}

/// Γ(g)/Γ(1/2 − τ − s), one coefficient of the connection formula.
fn connection_coefficient(tau: f64, g: f64, s: f64) -> Result<f64> {
    let (lg, sign) = log_gamma_sign(g)?;
    Ok(sign * lg.exp() * recip_gamma_real(0.5 - tau - s))
}

fn w_combination(tau: f64, omega: f64, z: f64) -> Result<SeriesResult<f64>> {
    let c_plus = connection_coefficient(tau, -2.0 * omega, omega)?;
    let c_minus = connection_coefficient(tau, 2.0 * omega, -omega)?;
    let m_plus = whittaker_m(tau, omega, z)?;
    let m_minus = whittaker_m(tau, -omega, z)?;
    let a = c_plus * m_plus.value;
    let b = c_minus * m_minus.value;
    let value = a + b;
    let magnitude = a.abs() + b.abs();
    if magnitude > MAX_CANCELLATION * value.abs() {
        return Err(Error::EvaluationUnstable(format!(
            "W combination cancels by a factor {:.3e} at z = {z}",
            magnitude / value.abs()
        )));
    }
    Ok(SeriesResult {
        value,
        terms_used: m_plus.terms_used + m_minus.terms_used,
        tail_estimate: c_plus.abs() * m_plus.tail_estimate
            + c_minus.abs() * m_minus.tail_estimate
            + 16.0 * f64::EPSILON * magnitude,
    })
}

fn w_integral(tau: f64, omega: f64, beta: f64, z: f64) -> Result<SeriesResult<f64>> {
    let power = tau + omega - 0.5;
    let spec = QuadratureSpec {
        rel_tol: 1e-14,
        abs_tol: 1e-17,
        ..QuadratureSpec::semi_infinite(beta - 1.0)
    };
    let r = integrate_semi_infinite(|u: f64| Ok((power * (u / z).ln_1p() - u).exp()), 1.0, &spec)?;
    let factor = (tau * z.ln() - 0.5 * z - log_gamma(beta)?).exp();
    Ok(SeriesResult {
        value: factor * r.value,
        terms_used: r.evaluations,
        tail_estimate: factor * r.error_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_half_closed_form() {
        for &z in &[0.5, 1.0, 2.0] {
            let m = whittaker_m(0.0, 0.5, z).unwrap().value;
            let expect = 2.0 * (z / 2.0).sinh();
            assert!(((m - expect) / expect).abs() < 1e-14, "z={z}");
        }
        let m = whittaker_m(0.0, 0.5, 2.0).unwrap().value;
        assert!((m - 2.350_402_387_287_603).abs() < 1e-14);
    }

    #[test]
    fn m_small_argument() {
        let z = 1e-6;
        let m = whittaker_m(0.0, 0.5, z).unwrap().value;
        assert!(((m - z) / z).abs() < 1e-6);
    }

    #[test]
    fn w_half_closed_form_via_offset() {
        for &z in &[0.5, 1.0, 2.0] {
            let w = whittaker_w(0.0, 0.5 + 1e-6, z).unwrap().value;
            assert!((w - (-z / 2.0).exp()).abs() < 1e-5, "z={z}");
            let w = whittaker_w(0.0, 0.5, z).unwrap().value;
            assert!((w - (-z / 2.0).exp()).abs() < 1e-5, "z={z}");
        }
    }

    #[test]
    fn w_symmetry_in_omega() {
        let a = whittaker_w(0.0, 0.3, 2.0).unwrap().value;
        let b = whittaker_w(0.0, -0.3, 2.0).unwrap().value;
        assert!((a - b).abs() <= 1e-10 * a.abs());
    }

    #[test]
    fn w_large_argument_trend() {
        let (tau, omega) = (0.3, 0.2);
        let ratio =
            |z: f64| whittaker_w(tau, omega, z).unwrap().value / ((-z / 2.0).exp() * z.powf(tau));
        let (r1, r2) = (ratio(40.0), ratio(80.0));
        assert!((r1 - 1.0).abs() < 5e-2);
        assert!((r2 - 1.0).abs() < (r1 - 1.0).abs());
    }

    #[test]
    fn routes_agree_at_switch() {
        for &(tau, omega) in &[(0.2, 0.3), (-0.1, 0.25), (0.0, 0.8), (0.4, 1.3)] {
            let z = 7.5;
            let comb = w_combination(tau, omega, z).unwrap().value;
            let beta = 0.5 + omega - tau;
            let int = w_integral(tau, omega, beta, z).unwrap().value;
            assert!(
                ((comb - int) / int).abs() < 1e-11,
                "({tau},{omega}): {comb} vs {int}"
            );
        }
    }

    #[test]
    fn direct_formula_assembly() {
        let cases = [
            (0.1, 0.2, 0.7),
            (-0.3, 0.45, 3.1),
            (0.25, 1.1, 5.0),
            (0.0, 0.05, 0.2),
        ];
        for &(tau, omega, z) in &cases {
            let m = whittaker_m(tau, omega, z).unwrap().value;
            let f = kummer_1f1(0.5 + omega - tau, 2.0 * omega + 1.0, z, 1e-15)
                .unwrap()
                .value;
            let direct = z.powf(0.5 + omega) * (-z / 2.0).exp() * f;
            assert!(((m - direct) / direct).abs() < 1e-12);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(whittaker_m(0.0, 0.5, 0.0).is_err());
        assert!(whittaker_w(0.0, 0.5, -1.0).is_err());
        assert!(matches!(
            whittaker_m(0.0, -1.0, 1.0),
            Err(Error::Pole { .. })
        ));
    }
}
