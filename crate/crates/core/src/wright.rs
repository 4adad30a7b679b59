//! The Fox–Wright function
//!
//! ```text
//! pΨq[(a_i, α_i); (b_j, β_j) | z] = Σ_k Π Γ(a_i + α_i k) / Π Γ(b_j + β_j k) · z^k / k!
//! ```
//!
//! summed term by term in log space. The series is entire when
//! κ = Σβ_j − Σα_i > −1; [`eval_wright`] refuses anything else. Callers that
//! know their argument lies inside the finite disk of convergence of a κ = −1
//! series can opt in through [`WrightOptions::allow_finite_radius`].

use crate::error::{domain, ensure_finite, Error, Result};
use crate::series::{check_tol, sum_series, SeriesResult, DEFAULT_MAX_TERMS, DEFAULT_TOL};
use crate::special::{is_nonpositive_integer, log_gamma, log_gamma_complex, log_gamma_sign};
use num_complex::Complex64;

/// One (a, α) parameter pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightPair {
    pub coeff: Complex64,
    pub scale: f64,
}

impl WrightPair {
    pub fn real(coeff: f64, scale: f64) -> Self {
        WrightPair {
            coeff: Complex64::new(coeff, 0.0),
            scale,
        }
    }

    fn is_real(&self) -> bool {
        self.coeff.im == 0.0
    }

    fn arg_real(&self, k: usize) -> f64 {
        self.coeff.re + self.scale * k as f64
    }

    fn arg(&self, k: usize) -> Complex64 {
        self.coeff + self.scale * k as f64
    }
}

/// Upper pairs (a_i, α_i) and lower pairs (b_j, β_j).
#[derive(Debug, Clone, PartialEq)]
pub struct WrightParams {
    upper: Vec<WrightPair>,
    lower: Vec<WrightPair>,
}

/// κ within this distance of −1 is treated as the boundary case.
const KAPPA_BOUNDARY_EPS: f64 = 1e-12;

impl WrightParams {
    /// Real parameter pairs.
    pub fn new(upper: &[(f64, f64)], lower: &[(f64, f64)]) -> Result<Self> {
        Self::from_pairs(
            upper.iter().map(|&(a, s)| WrightPair::real(a, s)).collect(),
            lower.iter().map(|&(b, s)| WrightPair::real(b, s)).collect(),
        )
    }

    pub fn from_pairs(upper: Vec<WrightPair>, lower: Vec<WrightPair>) -> Result<Self> {
        for (side, pairs) in [("upper", &upper), ("lower", &lower)] {
            for (i, p) in pairs.iter().enumerate() {
                ensure_finite("Wright coefficient (re)", p.coeff.re)?;
                ensure_finite("Wright coefficient (im)", p.coeff.im)?;
                ensure_finite("Wright scale", p.scale)?;
                if p.scale == 0.0 {
                    return Err(domain(format!("{side} pair {i} has a zero scale")));
                }
            }
        }
        Ok(WrightParams { upper, lower })
    }

    pub fn upper(&self) -> &[WrightPair] {
        &self.upper
    }

    pub fn lower(&self) -> &[WrightPair] {
        &self.lower
    }

    pub fn is_real(&self) -> bool {
        self.upper
            .iter()
            .chain(&self.lower)
            .all(WrightPair::is_real)
    }

    /// κ = Σβ_j − Σα_i.
    pub fn kappa(&self) -> f64 {
        self.lower.iter().map(|p| p.scale).sum::<f64>()
            - self.upper.iter().map(|p| p.scale).sum::<f64>()
    }

    /// Radius of convergence in z: infinite for κ > −1,
    /// Π|β_j|^{β_j} / Π|α_i|^{α_i} on the boundary κ = −1, zero below it.
    pub fn radius(&self) -> f64 {
        let kappa = self.kappa();
        if kappa > -1.0 + KAPPA_BOUNDARY_EPS {
            return f64::INFINITY;
        }
        if kappa < -1.0 - KAPPA_BOUNDARY_EPS {
            return 0.0;
        }
        let ln_rho: f64 = self
            .lower
            .iter()
            .map(|p| p.scale * p.scale.abs().ln())
            .sum::<f64>()
            - self
                .upper
                .iter()
                .map(|p| p.scale * p.scale.abs().ln())
                .sum::<f64>();
        ln_rho.exp()
    }

    /// First k from which every argument with positive scale has positive real part.
    fn burn_in(&self) -> usize {
        self.upper
            .iter()
            .chain(&self.lower)
            .filter(|p| p.scale > 0.0 && p.coeff.re <= 0.0)
            .map(|p| (-p.coeff.re / p.scale).floor() as usize + 1)
            .max()
            .unwrap_or(0)
    }
}

/// κ = Σβ_j − Σα_i.
pub fn kappa(params: &WrightParams) -> f64 {
    params.kappa()
}

/// Evaluation controls for [`eval_wright_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightOptions {
    pub tol: f64,
    pub max_terms: usize,
    /// Accept κ = −1 when |z| is strictly inside the disk of convergence.
    pub allow_finite_radius: bool,
}

impl Default for WrightOptions {
    fn default() -> Self {
        WrightOptions {
            tol: DEFAULT_TOL,
            max_terms: DEFAULT_MAX_TERMS,
            allow_finite_radius: false,
        }
    }
}

impl WrightOptions {
    pub fn finite_radius(tol: f64) -> Self {
        WrightOptions {
            tol,
            allow_finite_radius: true,
            ..Self::default()
        }
    }
}

fn gate(params: &WrightParams, modulus: f64, opts: &WrightOptions) -> Result<()> {
    if modulus == 0.0 {
        return Ok(());
    }
    let kappa = params.kappa();
    if kappa > -1.0 + KAPPA_BOUNDARY_EPS {
        return Ok(());
    }
    if !opts.allow_finite_radius || kappa < -1.0 - KAPPA_BOUNDARY_EPS {
        return Err(Error::ConvergenceViolation { kappa });
    }
    let radius = params.radius();
    if modulus < radius * (1.0 - 1e-12) {
        Ok(())
    } else {
        Err(Error::OutsideRadius { modulus, radius })
    }
}

/// ln|term_k| with sign, or `None` when a lower gamma sits on a pole (term = 0).
/// The second component bounds the magnitude of the summed logarithms, which
/// drives the rounding estimate of the exponentiated term.
fn log_term_real(
    params: &WrightParams,
    k: usize,
    ln_abs_z: f64,
    z_negative: bool,
) -> Result<Option<(f64, f64, f64)>> {
    let mut log_mag = 0.0;
    let mut log_scale = 0.0;
    let mut sign = 1.0;
    for (index, p) in params.upper.iter().enumerate() {
        let arg = p.arg_real(k);
        if is_nonpositive_integer(arg) {
            return Err(Error::NumeratorPole { index, k });
        }
        let (lg, s) = log_gamma_sign(arg)?;
        log_mag += lg;
        log_scale += lg.abs();
        sign *= s;
    }
    for p in &params.lower {
        let arg = p.arg_real(k);
        if is_nonpositive_integer(arg) {
            return Ok(None);
        }
        let (lg, s) = log_gamma_sign(arg)?;
        log_mag -= lg;
        log_scale += lg.abs();
        sign *= s;
    }
    if k > 0 {
        let kf = k as f64;
        let lk = log_gamma(kf + 1.0)?;
        log_mag += kf * ln_abs_z - lk;
        log_scale += (kf * ln_abs_z).abs() + lk;
        if z_negative && k % 2 == 1 {
            sign = -sign;
        }
    }
    Ok(Some((log_mag, sign, log_scale)))
}

fn log_term_complex(
    params: &WrightParams,
    k: usize,
    ln_z: Complex64,
) -> Result<Option<(Complex64, f64)>> {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut log_scale = 0.0;
    for (index, p) in params.upper.iter().enumerate() {
        let arg = p.arg(k);
        if arg.im == 0.0 && is_nonpositive_integer(arg.re) {
            return Err(Error::NumeratorPole { index, k });
        }
        let lg = log_gamma_complex(arg)?;
        log_scale += lg.norm();
        acc += lg;
    }
    for p in &params.lower {
        let arg = p.arg(k);
        if arg.im == 0.0 && is_nonpositive_integer(arg.re) {
            return Ok(None);
        }
        let lg = log_gamma_complex(arg)?;
        log_scale += lg.norm();
        acc -= lg;
    }
    if k > 0 {
        let kf = k as f64;
        let lk = log_gamma(kf + 1.0)?;
        acc += ln_z * kf - lk;
        log_scale += (ln_z * kf).norm() + lk;
    }
    Ok(Some((acc, log_scale)))
}

fn term_error(magnitude: f64, log_scale: f64) -> f64 {
    f64::EPSILON * (4.0 + log_scale) * magnitude
}

/// Sums the series for real parameters and real z.
pub fn eval_wright_real_with(
    params: &WrightParams,
    z: f64,
    opts: &WrightOptions,
) -> Result<SeriesResult<f64>> {
    ensure_finite("z", z)?;
    check_tol(opts.tol)?;
    if !params.is_real() {
        return Err(domain("complex Wright parameters need eval_wright_complex"));
    }
    gate(params, z.abs(), opts)?;
    let ln_abs_z = if z == 0.0 {
        f64::NEG_INFINITY
    } else {
        z.abs().ln()
    };
    let max_terms = if z == 0.0 { 1 } else { opts.max_terms };
    if z == 0.0 {
        let term = match log_term_real(params, 0, ln_abs_z, false)? {
            Some((lm, s, ls)) => {
                let v = s * lm.exp();
                (v, term_error(v.abs(), ls))
            }
            None => (0.0, 0.0),
        };
        return Ok(SeriesResult {
            value: term.0,
            terms_used: 1,
            tail_estimate: term.1,
        });
    }
    sum_series(opts.tol, max_terms, params.burn_in(), |k| {
        Ok(match log_term_real(params, k, ln_abs_z, z < 0.0)? {
            Some((lm, s, ls)) => {
                let v = s * lm.exp();
                (v, term_error(v.abs(), ls))
            }
            None => (0.0, 0.0),
        })
    })
}

/// Sums the series for complex parameters and/or complex z.
pub fn eval_wright_with(
    params: &WrightParams,
    z: Complex64,
    opts: &WrightOptions,
) -> Result<SeriesResult<Complex64>> {
    ensure_finite("Re z", z.re)?;
    ensure_finite("Im z", z.im)?;
    check_tol(opts.tol)?;
    gate(params, z.norm(), opts)?;
    if z.norm() == 0.0 {
        let (value, err) = match log_term_complex(params, 0, Complex64::new(0.0, 0.0))? {
            Some((l, ls)) => {
                let v = l.exp();
                (v, term_error(v.norm(), ls))
            }
            None => (Complex64::new(0.0, 0.0), 0.0),
        };
        return Ok(SeriesResult {
            value,
            terms_used: 1,
            tail_estimate: err,
        });
    }
    let ln_z = z.ln();
    sum_series(opts.tol, opts.max_terms, params.burn_in(), |k| {
        Ok(match log_term_complex(params, k, ln_z)? {
            Some((l, ls)) => {
                let v = l.exp();
                (v, term_error(v.norm(), ls))
            }
            None => (Complex64::new(0.0, 0.0), 0.0),
        })
    })
}

/// pΨq at real z with the strict convergence gate (κ > −1 required for z ≠ 0).
pub fn eval_wright(
    params: &WrightParams,
    z: f64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult<f64>> {
    let opts = WrightOptions {
        tol,
        max_terms,
        allow_finite_radius: false,
    };
    eval_wright_real_with(params, z, &opts)
}

/// pΨq at complex z with the strict convergence gate.
pub fn eval_wright_complex(
    params: &WrightParams,
    z: Complex64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult<Complex64>> {
    let opts = WrightOptions {
        tol,
        max_terms,
        allow_finite_radius: false,
    };
    eval_wright_with(params, z, &opts)
}

/// The first `n` series terms at real z (for diagnostics and tests).
pub fn wright_terms(params: &WrightParams, z: f64, n: usize) -> Result<Vec<f64>> {
    if !params.is_real() {
        return Err(domain("wright_terms needs real parameters"));
    }
    let ln_abs_z = if z == 0.0 {
        f64::NEG_INFINITY
    } else {
        z.abs().ln()
    };
    (0..n)
        .map(|k| {
            if z == 0.0 && k > 0 {
                return Ok(0.0);
            }
            Ok(match log_term_real(params, k, ln_abs_z, z < 0.0)? {
                Some((lm, s, _)) => s * lm.exp(),
                None => 0.0,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma;

    fn exp_params() -> WrightParams {
        WrightParams::new(&[(1.0, 1.0)], &[(1.0, 1.0)]).unwrap()
    }

    #[test]
    fn kappa_examples() {
        // Euler-theorem shape with λ = a = 1
        let p = WrightParams::new(
            &[(1.5, 2.0), (1.0, 1.0)],
            &[(1.5, 1.0), (2.0, 1.0), (4.0, 2.0)],
        )
        .unwrap();
        assert_eq!(kappa(&p), 1.0);
        assert_eq!(kappa(&exp_params()), 0.0);
        let p = WrightParams::new(&[(1.0, 3.0)], &[(1.0, 1.0)]).unwrap();
        assert_eq!(kappa(&p), -2.0);
    }

    #[test]
    fn exp_reduction() {
        let r = eval_wright(&exp_params(), 1.0, 1e-12, 10_000).unwrap();
        assert!((r.value - std::f64::consts::E).abs() <= 1e-10);
    }

    #[test]
    fn zero_argument_is_gamma_ratio() {
        let p = WrightParams::new(&[(2.5, 2.0), (1.0, 1.0)], &[(1.5, 1.0), (3.25, 2.0)]).unwrap();
        let r = eval_wright(&p, 0.0, 1e-12, 100).unwrap();
        let expect = gamma(2.5).unwrap() / (gamma(1.5).unwrap() * gamma(3.25).unwrap());
        assert!(((r.value - expect) / expect).abs() <= 1e-13);
        assert_eq!(r.terms_used, 1);
    }

    #[test]
    fn gate_rejects_kappa_at_or_below_minus_one() {
        let p = WrightParams::new(&[(1.0, 3.0)], &[(1.0, 1.0)]).unwrap();
        assert!(matches!(
            eval_wright(&p, 0.5, 1e-12, 100),
            Err(Error::ConvergenceViolation { .. })
        ));
        // κ = −1 (geometric series) is rejected by the strict gate…
        let geo = WrightParams::new(&[(1.0, 1.0), (1.0, 1.0)], &[(1.0, 1.0)]).unwrap();
        assert!(matches!(
            eval_wright(&geo, 0.5, 1e-12, 100),
            Err(Error::ConvergenceViolation { .. })
        ));
        // …but accepted inside its unit disk on request.
        let r = eval_wright_real_with(&geo, 0.5, &WrightOptions::finite_radius(1e-13)).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
        assert!(matches!(
            eval_wright_real_with(&geo, 1.0, &WrightOptions::finite_radius(1e-13)),
            Err(Error::OutsideRadius { .. })
        ));
        // any κ at z = 0
        assert!(eval_wright(&p, 0.0, 1e-12, 100).is_ok());
    }

    #[test]
    fn radius_of_boundary_series() {
        // Γ(p+2+2k)Γ(1+k)/(Γ(μ+k)Γ(B+k) k!): radius 1/4
        let p = WrightParams::new(&[(2.0, 2.0), (1.0, 1.0)], &[(1.5, 1.0), (1.5, 1.0)]).unwrap();
        assert!((p.radius() - 0.25).abs() < 1e-15);
        assert_eq!(exp_params().radius(), f64::INFINITY);
    }

    #[test]
    fn numerator_pole_is_reported() {
        let p = WrightParams::new(&[(-2.0, 1.0)], &[(1.0, 1.0)]).unwrap();
        assert!(matches!(
            eval_wright(&p, 0.3, 1e-12, 100),
            Err(Error::NumeratorPole { index: 0, k: 0 })
        ));
    }

    #[test]
    fn denominator_poles_vanish() {
        // 1/Γ(k − 2): terms k = 0, 1, 2 vanish; Σ_{k≥3} z^k/(k−3)! = z³ e^z
        let p = WrightParams::new(&[(1.0, 1.0)], &[(-2.0, 1.0)]).unwrap();
        let z = 0.7f64;
        let r = eval_wright(&p, z, 1e-14, 1000).unwrap();
        let expect = z.powi(3) * z.exp();
        assert!(((r.value - expect) / expect).abs() < 1e-13);
    }

    #[test]
    fn zero_scale_rejected() {
        assert!(WrightParams::new(&[(1.0, 0.0)], &[]).is_err());
    }

    #[test]
    fn complex_path_matches_real_path() {
        let p = WrightParams::new(
            &[(2.5, 2.0), (1.0, 1.0)],
            &[(1.5, 1.0), (2.0, 1.0), (4.5, 2.0)],
        )
        .unwrap();
        let r = eval_wright(&p, -0.8, 1e-14, 1000).unwrap();
        let c = eval_wright_complex(&p, Complex64::new(-0.8, 0.0), 1e-14, 1000).unwrap();
        assert!((c.value.re - r.value).abs() < 1e-13 * r.value.abs());
        assert!(c.value.im.abs() < 1e-13);
    }
}
