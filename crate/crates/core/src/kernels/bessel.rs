use super::whittaker::whittaker_w;
use crate::error::{domain, ensure_finite, Error, Result};
use crate::series::SeriesResult;
use crate::special::RECIP_GAMMA_1P_TAYLOR;
use std::f64::consts::PI;

/// Orders with |2ν − round(2ν)| below this use the Temme/Steed path.
const HALF_INTEGER_WINDOW: f64 = 1e-3;
const MAX_ITER: usize = 10_000;

/// K_ν(z) for z > 0.
///
/// Generic orders go through K_ν(z) = √(π/(2z)) W_{0,ν}(2z); integer and
/// half-integer orders (and their neighbourhoods) use Temme's series for
/// z < 2, Steed's continued fraction otherwise, and forward recurrence in ν.
pub fn bessel_k(nu: f64, z: f64) -> Result<SeriesResult<f64>> {
    ensure_finite("nu", nu)?;
    ensure_finite("z", z)?;
    if z <= 0.0 {
        return Err(domain(format!("bessel_k needs z > 0, got {z}")));
    }
    let nu = nu.abs();
    if (2.0 * nu - (2.0 * nu).round()).abs() < HALF_INTEGER_WINDOW {
        return temme_steed(nu, z);
    }
    let w = whittaker_w(0.0, nu, 2.0 * z)?;
    Ok(w.map_scale((PI / (2.0 * z)).sqrt()))
}

/// (1/Γ(1−μ) − 1/Γ(1+μ))/(2μ) and (1/Γ(1−μ) + 1/Γ(1+μ))/2 from the Taylor
/// coefficients of 1/Γ(1+x), plus 1/Γ(1+μ) and 1/Γ(1−μ).
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let (mut odd, mut even) = (0.0f64, 0.0f64);
    let mut pow = 1.0f64;
    for (k, &c) in RECIP_GAMMA_1P_TAYLOR.iter().enumerate() {
        if k % 2 == 0 {
            even += c * pow;
        } else {
            odd += c * pow;
            pow *= mu * mu;
        }
    }
    // odd collects Σ c_{2j+1} μ^{2j}
    let gam1 = -odd;
    let gam2 = even;
    let plus = gam2 - mu * gam1;
    let minus = gam2 + mu * gam1;
    (gam1, gam2, plus, minus)
}

fn temme_steed(nu: f64, x: f64) -> Result<SeriesResult<f64>> {
    let nl = (nu + 0.5).floor();
    let mu = nu - nl;
    let mu2 = mu * mu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let mut iterations = 0;
    let (mut k_mu, mut k_mu1) = if x < 2.0 {
        let x2 = 0.5 * x;
        let pimu = PI * mu;
        let fact = if pimu.abs() < f64::EPSILON {
            1.0
        } else {
            pimu / pimu.sin()
        };
        let d = -x2.ln();
        let e = mu * d;
        let fact2 = if e.abs() < f64::EPSILON {
            1.0
        } else {
            e.sinh() / e
        };
        let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
        let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let mut sum = ff;
        let ee = e.exp();
        let mut p = 0.5 * ee / gampl;
        let mut q = 0.5 / (ee * gammi);
        let mut c = 1.0;
        let dd = x2 * x2;
        let mut sum1 = p;
        let mut converged = false;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - mu2);
            c *= dd / fi;
            p /= fi - mu;
            q /= fi + mu;
            let del = c * ff;
            sum += del;
            sum1 += c * (p - fi * ff);
            iterations = i;
            if del.abs() < sum.abs() * f64::EPSILON {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence { terms: MAX_ITER });
        }
        (sum, sum1 * xi2)
    } else {
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut delh = d;
        let mut h = d;
        let (mut q1, mut q2) = (0.0f64, 1.0f64);
        let a1 = 0.25 - mu2;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        let mut converged = false;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            a -= 2.0 * fi;
            c = -a * c / (fi + 1.0);
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh *= b * d - 1.0;
            h += delh;
            let dels = q * delh;
            s += dels;
            iterations = i;
            if (dels / s).abs() < f64::EPSILON {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence { terms: MAX_ITER });
        }
        h *= a1;
        let k = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
        (k, k * (mu + x + 0.5 - h) * xi)
    };
    for i in 1..=(nl as usize) {
        let next = (mu + i as f64) * xi2 * k_mu1 + k_mu;
        k_mu = k_mu1;
        k_mu1 = next;
    }
    Ok(SeriesResult {
        value: k_mu,
        terms_used: iterations + 1,
        tail_estimate: 8.0 * f64::EPSILON * (nl + 2.0) * k_mu.abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate_semi_infinite, QuadratureSpec};

    /// ∫₀^∞ e^{−z cosh t} cosh(νt) dt
    fn k_integral(nu: f64, z: f64) -> f64 {
        let spec = QuadratureSpec {
            rel_tol: 1e-14,
            abs_tol: 1e-300,
            ..QuadratureSpec::semi_infinite(0.0)
        };
        integrate_semi_infinite(
            |t: f64| Ok((nu * t - z * t.cosh()).exp() * 0.5 + (-nu * t - z * t.cosh()).exp() * 0.5),
            z.min(1.0),
            &spec,
        )
        .unwrap()
        .value
    }

    #[test]
    fn half_order_closed_form() {
        for &z in &[0.5, 1.0, 2.0, 3.7] {
            let k = bessel_k(0.5, z).unwrap().value;
            let expect = (PI / (2.0 * z)).sqrt() * (-z).exp();
            assert!(
                ((k - expect) / expect).abs() < 1e-13,
                "z={z}: {k} vs {expect}"
            );
        }
        let k = bessel_k(0.5, 1.0).unwrap().value;
        assert!((k - 0.461_068_504_447_894_4).abs() < 1e-14);
    }

    #[test]
    fn integer_orders_match_reference() {
        // K₀(1), K₁(1), K₂(3) from Abramowitz & Stegun tables 9.8
        assert!((bessel_k(0.0, 1.0).unwrap().value - 0.421_024_438_240_708_3).abs() < 1e-14);
        assert!((bessel_k(1.0, 1.0).unwrap().value - 0.601_907_230_197_234_6).abs() < 1e-14);
        let k2 = bessel_k(2.0, 3.0).unwrap().value;
        assert!(((k2 - k_integral(2.0, 3.0)) / k2).abs() < 1e-12);
    }

    #[test]
    fn symmetric_in_order() {
        let a = bessel_k(0.3, 1.5).unwrap().value;
        let b = bessel_k(-0.3, 1.5).unwrap().value;
        assert!((a - b).abs() <= 1e-10 * a);
    }

    #[test]
    fn decay_envelope() {
        let k = bessel_k(0.3, 8.0).unwrap().value;
        assert!(k > 0.0 && k < 2.0 * (-8.0f64).exp());
        assert!(((k - k_integral(0.3, 8.0)) / k).abs() < 1e-10);
    }

    #[test]
    fn whittaker_route_against_integral_oracle() {
        let orders = [0.1, 0.65, 1.2, 1.75, 2.3];
        let points = [0.5, 1.0, 2.5, 5.0, 10.0];
        for &nu in &orders {
            for &z in &points {
                let k = bessel_k(nu, z).unwrap().value;
                let oracle = k_integral(nu, z);
                assert!(
                    ((k - oracle) / oracle).abs() < 1e-8,
                    "nu={nu} z={z}: {k} vs {oracle}"
                );
            }
        }
    }

    #[test]
    fn temme_and_whittaker_paths_meet() {
        // just outside the half-integer window on either side
        for &nu in &[0.5 - 6e-4, 1.0 + 6e-4] {
            for &z in &[0.7, 3.0] {
                let w = bessel_k(nu, z).unwrap().value;
                let t = temme_steed(nu, z).unwrap().value;
                assert!(((w - t) / t).abs() < 1e-9, "nu={nu} z={z}: {w} vs {t}");
            }
        }
    }

    #[test]
    fn rejects_nonpositive_argument() {
        assert!(bessel_k(0.5, 0.0).is_err());
    }
}
