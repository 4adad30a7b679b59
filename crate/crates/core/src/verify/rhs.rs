//! Closed-form right-hand sides: a prefactor times a Fox–Wright series.

use super::case::{Theorem, Transform, TransformCase};
use crate::error::{domain, Error, Result};
use crate::gtsf::GtsfParams;
use crate::series::{SeriesResult, SeriesSum, DEFAULT_MAX_TERMS};
use crate::special::{cis_pi, is_nonpositive_integer, log_gamma, log_gamma_sign};
use crate::wright::{eval_wright_real_with, eval_wright_with, WrightOptions, WrightParams};
use num_complex::Complex64;

/// Stopping tolerance of the right-hand-side series.
pub const RHS_TOL: f64 = 1e-15;

/// prefactor · Ψ(argument).
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub wright: WrightParams,
    pub argument: f64,
    pub prefactor: f64,
}

impl ClosedForm {
    pub fn eval(&self) -> Result<SeriesResult<f64>> {
        let series = eval_wright_real_with(
            &self.wright,
            self.argument,
            &WrightOptions::finite_radius(RHS_TOL),
        )?;
        Ok(series.map_scale(self.prefactor))
    }
}

fn leading_power(g: &GtsfParams, x: f64) -> f64 {
    (x.sqrt() / 2.0).powf(g.p + 1.0)
}

/// The (μ, λ), (p/ξ + b/2 + 1, a) lower pairs shared by every theorem.
fn gtsf_lower(g: &GtsfParams) -> [(f64, f64); 2] {
    [(g.mu, g.lambda), (g.second_offset(), g.a as f64)]
}

/// Wright parameters of the Laplace-type series Σ Γ(2k+p+2)/(Γ(λk+μ)Γ(ak+B)) w^k.
fn laplace_wright(g: &GtsfParams) -> WrightParams {
    WrightParams::new(&[(g.p + 2.0, 2.0), (1.0, 1.0)], &gtsf_lower(g))
        .expect("validated GTSF parameters")
}

/// The closed form of the Euler, Laplace, Whittaker or K-transform identity.
pub fn closed_form(case: &TransformCase) -> Result<ClosedForm> {
    let g = &case.gtsf;
    let x = case.x;
    let lead = leading_power(g, x);
    let lower = gtsf_lower(g);
    Ok(match case.transform {
        Transform::Euler { r, s } => ClosedForm {
            wright: WrightParams::new(
                &[(g.p + r + 1.0, 2.0), (1.0, 1.0)],
                &[lower[0], lower[1], (g.p + r + s + 1.0, 2.0)],
            )?,
            argument: -g.c * x / 4.0,
            prefactor: lead * log_gamma(s)?.exp(),
        },
        Transform::Laplace { s } => ClosedForm {
            wright: laplace_wright(g),
            argument: -g.c * x / (4.0 * s * s),
            prefactor: lead * s.powf(-(g.p + 2.0)),
        },
        Transform::Whittaker { zeta, tau, omega } => ClosedForm {
            wright: WrightParams::new(
                &[
                    (omega + zeta + g.p + 1.5, 2.0),
                    (-omega + zeta + g.p + 1.5, 2.0),
                    (1.0, 1.0),
                ],
                &[lower[0], lower[1], (-tau + zeta + g.p + 2.0, 2.0)],
            )?,
            argument: -g.c * x / 4.0,
            prefactor: lead,
        },
        Transform::KTransform { rho, nu, omega } => ClosedForm {
            wright: WrightParams::new(
                &[
                    ((rho + g.p + nu + 1.0) / 2.0, 1.0),
                    ((rho + g.p - nu + 1.0) / 2.0, 1.0),
                    (1.0, 1.0),
                ],
                &lower,
            )?,
            argument: -g.c * x / (omega * omega),
            prefactor: 2f64.powf(rho + g.p - 1.0) * omega.powf(-(rho + g.p + 1.0)) * lead,
        },
        Transform::FracFourier { .. } => {
            return Err(domain(
                "the fractional Fourier identity has no real closed form",
            ))
        }
    })
}

fn expect_theorem(case: &TransformCase, theorem: Theorem) -> Result<()> {
    if case.theorem() == theorem {
        Ok(())
    } else {
        Err(domain(format!(
            "expected a {theorem} case, got {}",
            case.theorem()
        )))
    }
}

/// (√x/2)^{p+1} Γ(s) ₂Ψ₃[(p+r+1,2),(1,1); (μ,λ),(p/ξ+b/2+1,a),(p+r+s+1,2) | −cx/4].
pub fn rhs_euler(case: &TransformCase) -> Result<SeriesResult<f64>> {
    expect_theorem(case, Theorem::Euler)?;
    closed_form(case)?.eval()
}

/// (√x/2)^{p+1} s^{−(p+2)} ₂Ψ₂[(p+2,2),(1,1); (μ,λ),(p/ξ+b/2+1,a) | −cx/(4s²)].
pub fn rhs_laplace(case: &TransformCase) -> Result<SeriesResult<f64>> {
    expect_theorem(case, Theorem::Laplace)?;
    closed_form(case)?.eval()
}

/// The Laplace closed form continued to complex s (principal branch of s^{−(p+2)}).
pub fn rhs_laplace_at(gtsf: &GtsfParams, x: f64, s: Complex64) -> Result<SeriesResult<Complex64>> {
    gtsf.validate()?;
    if s.norm() == 0.0 {
        return Err(domain("the Laplace closed form needs s != 0"));
    }
    let argument = Complex64::new(-gtsf.c * x / 4.0, 0.0) / (s * s);
    let series = eval_wright_with(
        &laplace_wright(gtsf),
        argument,
        &WrightOptions::finite_radius(RHS_TOL),
    )?;
    let prefactor = (-(gtsf.p + 2.0) * s.ln()).exp() * leading_power(gtsf, x);
    Ok(SeriesResult {
        value: series.value * prefactor,
        terms_used: series.terms_used,
        tail_estimate: series.tail_estimate * prefactor.norm(),
    })
}

/// (√x/2)^{p+1} ₃Ψ₃[(ω+ζ+p+3/2,2),(−ω+ζ+p+3/2,2),(1,1); (μ,λ),(p/ξ+b/2+1,a),(−τ+ζ+p+2,2) | −cx/4].
pub fn rhs_whittaker(case: &TransformCase) -> Result<SeriesResult<f64>> {
    expect_theorem(case, Theorem::Whittaker)?;
    closed_form(case)?.eval()
}

/// 2^{ρ+p−1} ω^{−(ρ+p+1)} (√x/2)^{p+1}
/// ₃Ψ₂[((ρ+p+ν+1)/2,1),((ρ+p−ν+1)/2,1),(1,1); (μ,λ),(p/ξ+b/2+1,a) | −cx/ω²].
pub fn rhs_ktransform(case: &TransformCase) -> Result<SeriesResult<f64>> {
    expect_theorem(case, Theorem::KTransform)?;
    closed_form(case)?.eval()
}

/// Ω = ω^{1/ζ}, the frequency of the fractional Fourier kernel.
pub fn frft_frequency(case: &TransformCase) -> Result<f64> {
    match case.transform {
        Transform::FracFourier { order, omega } => Ok(omega.powf(1.0 / order)),
        _ => Err(domain("not a fractional Fourier case")),
    }
}

/// The printed fractional Fourier series equals this sign times the Laplace
/// continuation at s = −iΩ, for every p.
pub const FRFT_SIGN: f64 = -1.0;

/// The printed series
/// (√x/2)^{p+1} Σ_k Γ(2k+p+2) (−cx/4)^k / [i^{m} Ω^{m} (−1)^{m−1} Γ(λk+μ) Γ(ak+p/ξ+(b+2)/2)],
/// m = 2k+p+2, with i = e^{iπ/2} and −1 = e^{−iπ}, so that i·(−1) = −i matches s = −iΩ.
pub fn rhs_frft(case: &TransformCase) -> Result<SeriesResult<Complex64>> {
    expect_theorem(case, Theorem::FracFourier)?;
    let g = &case.gtsf;
    g.validate()?;
    let big_omega = frft_frequency(case)?;
    let w = -g.c * case.x / 4.0;
    // same convergence structure as the Laplace series at s² = −Ω²
    let wright = laplace_wright(g);
    let modulus = w.abs() / (big_omega * big_omega);
    let kappa = wright.kappa();
    if modulus > 0.0 {
        if kappa < -1.0 - 1e-12 {
            return Err(Error::ConvergenceViolation { kappa });
        }
        if kappa <= -1.0 + 1e-12 && modulus >= wright.radius() * (1.0 - 1e-12) {
            return Err(Error::OutsideRadius {
                modulus,
                radius: wright.radius(),
            });
        }
    }
    let burn_in = [(g.mu, g.lambda), (g.second_offset(), g.a as f64)]
        .iter()
        .filter(|(c, _)| *c <= 0.0)
        .map(|(c, s)| (-c / s).floor() as usize + 1)
        .max()
        .unwrap_or(0);
    let ln_omega = big_omega.ln();
    let ln_w = if w == 0.0 {
        f64::NEG_INFINITY
    } else {
        w.abs().ln()
    };
    let mut acc = SeriesSum::new(RHS_TOL, burn_in);
    for k in 0..DEFAULT_MAX_TERMS {
        let kf = k as f64;
        let m = 2.0 * kf + g.p + 2.0;
        let d1 = g.lambda * kf + g.mu;
        let d2 = g.a as f64 * kf + g.second_offset();
        let term =
            if (k > 0 && w == 0.0) || is_nonpositive_integer(d1) || is_nonpositive_integer(d2) {
                Complex64::new(0.0, 0.0)
            } else {
                let (l1, s1) = log_gamma_sign(d1)?;
                let (l2, s2) = log_gamma_sign(d2)?;
                let lm = log_gamma(m)?;
                let power = if k == 0 { 0.0 } else { kf * ln_w };
                let sign = s1 * s2 * if w < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
                let magnitude = (lm - m * ln_omega - l1 - l2 + power).exp();
                cis_pi(-(m / 2.0) + (m - 1.0)) * (sign * magnitude)
            };
        let err = f64::EPSILON * (8.0 + 2.0 * kf) * term.norm();
        if acc.push(term, err) {
            let lead = leading_power(g, case.x);
            return Ok(acc.finish().map_scale(lead));
        }
    }
    Err(acc.non_convergence())
}

/// The Laplace continuation at s = −iΩ for a fractional Fourier case.
pub fn frft_continuation(case: &TransformCase) -> Result<SeriesResult<Complex64>> {
    let big_omega = frft_frequency(case)?;
    rhs_laplace_at(&case.gtsf, case.x, Complex64::new(0.0, -big_omega))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma;
    use std::f64::consts::PI;

    fn with_c(theorem: Theorem, c: f64) -> TransformCase {
        let mut case = TransformCase::canonical(theorem);
        case.gtsf.c = c;
        case
    }

    #[test]
    fn euler_k0_degeneracy() {
        let case = with_c(Theorem::Euler, 0.0);
        let g = case.gtsf;
        let (r, s) = (2.0, 3.0);
        let expect = 0.5f64.powf(g.p + 1.0) * gamma(s).unwrap() * gamma(g.p + r + 1.0).unwrap()
            / (gamma(g.mu).unwrap()
                * gamma(g.second_offset()).unwrap()
                * gamma(g.p + r + s + 1.0).unwrap());
        let v = rhs_euler(&case).unwrap().value;
        assert!(((v - expect) / expect).abs() < 1e-13);
    }

    #[test]
    fn laplace_large_s_scaling() {
        let mut case = TransformCase::canonical(Theorem::Laplace);
        case.transform = Transform::Laplace { s: 1000.0 };
        let a = rhs_laplace(&case).unwrap().value;
        case.transform = Transform::Laplace { s: 2000.0 };
        let b = rhs_laplace(&case).unwrap().value;
        let expect = 2f64.powf(-(case.gtsf.p + 2.0));
        assert!(((b / a - expect) / expect).abs() < 1e-6);
    }

    #[test]
    fn k_transform_symmetric_in_nu() {
        let case = TransformCase::canonical(Theorem::KTransform);
        let mut flipped = case;
        flipped.transform = Transform::KTransform {
            rho: 1.5,
            nu: -0.3,
            omega: 2.0,
        };
        let a = rhs_ktransform(&case).unwrap().value;
        let b = rhs_ktransform(&flipped).unwrap().value;
        assert_eq!(a, b);
    }

    #[test]
    fn k_transform_value_from_independent_oracle() {
        // high-precision quadrature of ∫ t^{1/2} K_{0.3}(2t) H_{1/2,1,1}(t/2) dt, x = 1/4
        let mut case = TransformCase::canonical(Theorem::KTransform);
        case.x = 0.25;
        let v = rhs_ktransform(&case).unwrap().value;
        assert!((v - 0.027_036_952_608_590_8).abs() < 1e-14, "{v}");
    }

    #[test]
    fn frft_k0_term() {
        // p = 0, reduced, c = 0, x = 1, ω = ζ = 1: 2/π
        let mut case = TransformCase::canonical(Theorem::FracFourier);
        case.gtsf = GtsfParams::reduced(0.0, 1.0, 0.0);
        case.x = 1.0;
        let v = rhs_frft(&case).unwrap().value;
        assert!((v - Complex64::new(2.0 / PI, 0.0)).norm() < 1e-15, "{v}");
    }

    #[test]
    fn frft_printed_series_is_sign_times_continuation() {
        for &p in &[0.0, 0.5, 0.3, 1.7] {
            let mut case = TransformCase::canonical(Theorem::FracFourier);
            case.gtsf.p = p;
            let printed = rhs_frft(&case).unwrap().value;
            let cont = frft_continuation(&case).unwrap().value;
            assert!(
                (printed - FRFT_SIGN * cont).norm() < 1e-13 * printed.norm(),
                "p={p}"
            );
        }
    }

    #[test]
    fn outside_radius_is_reported() {
        // reduced Whittaker series at |cx/4| = 1/4 sits on its radius
        let mut case = TransformCase::canonical(Theorem::Whittaker);
        case.x = 1.0;
        assert!(matches!(
            rhs_whittaker(&case),
            Err(Error::OutsideRadius { .. })
        ));
    }

    #[test]
    fn wrong_theorem_rejected() {
        let case = TransformCase::canonical(Theorem::Euler);
        assert!(rhs_laplace(&case).is_err());
        assert!(rhs_frft(&case).is_err());
    }
}
