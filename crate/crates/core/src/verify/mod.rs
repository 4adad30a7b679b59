//! Checks each transform identity by comparing direct quadrature of the
//! defining integral with the closed-form Fox–Wright right-hand side.

mod case;
mod lhs;
pub mod presets;
mod rhs;

pub use case::{Theorem, Transform, TransformCase, ALL_PARAMS, GTSF_PARAMS};
pub use lhs::{lhs, LhsValue, ScaledGtsf};
pub use rhs::{
    closed_form, frft_continuation, frft_frequency, rhs_euler, rhs_frft, rhs_ktransform,
    rhs_laplace, rhs_laplace_at, rhs_whittaker, ClosedForm, FRFT_SIGN, RHS_TOL,
};

use crate::error::{domain, Error, Result};
use crate::series::SeriesResult;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Residuals at or below this absolute size pass regardless of the relative tolerance.
pub const ABS_FLOOR: f64 = 1e-14;

/// Outcome of one identity check.
///
/// `lhs`, `rhs` and the residuals are `None` when the case was rejected before
/// evaluation or an evaluation failed; `notes` then says why.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub params: BTreeMap<String, f64>,
    #[serde(with = "complex_json")]
    pub lhs: Option<Complex64>,
    #[serde(with = "complex_json")]
    pub rhs: Option<Complex64>,
    pub abs_residual: Option<f64>,
    pub rel_residual: Option<f64>,
    pub quad_error: Option<f64>,
    pub series_terms: Option<usize>,
    pub passed: bool,
    pub notes: String,
}

mod complex_json {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct ReIm {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(v: &Option<Complex64>, s: S) -> Result<S::Ok, S::Error> {
        v.map(|z| ReIm { re: z.re, im: z.im }).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Complex64>, D::Error> {
        Ok(Option::<ReIm>::deserialize(d)?.map(|z| Complex64::new(z.re, z.im)))
    }
}

impl VerificationReport {
    fn unevaluated(case: &TransformCase, notes: String) -> Self {
        VerificationReport {
            theorem: case.theorem(),
            params: case.params(),
            lhs: None,
            rhs: None,
            abs_residual: None,
            rel_residual: None,
            quad_error: None,
            series_terms: None,
            passed: false,
            notes,
        }
    }

    /// Rebuilds the case the report was produced from.
    pub fn case(&self) -> Result<TransformCase> {
        TransformCase::from_params(self.theorem, &self.params)
    }
}

fn errata_note(case: &TransformCase) -> Option<String> {
    Some(match case.transform {
        Transform::Euler { .. } => return None,
        Transform::Laplace { .. } => {
            "errata: Wright argument -cx/(4s^2) with prefactor s^-(p+2), in place of -cx/(4s^k); series taken as 2Psi2".to_string()
        }
        Transform::Whittaker { .. } => {
            "errata: convergence enforced as zeta +- omega + p + 3/2 > 0 (the stated condition names an undefined Re(e))".to_string()
        }
        Transform::KTransform { .. } => {
            "errata: prefactor omega^-(rho+p+1), in place of omega^(1-rho-p)".to_string()
        }
        Transform::FracFourier { .. } => {
            format!(
                "sign discrepancy: printed series = {FRFT_SIGN:+.1} * regularized one-sided integral (global sign, with -1 = exp(-i pi) in (-1)^(m-1))"
            )
        }
    })
}

fn error_note(e: &Error) -> String {
    format!("error: {}: {e}", e.kind())
}

/// Runs one identity check. `tol` defaults to the theorem's tolerance.
///
/// Invalid cases and evaluation failures are reported with `passed = false`;
/// only a malformed tolerance is an error.
pub fn verify(case: &TransformCase, tol: Option<f64>) -> Result<VerificationReport> {
    let tol = tol.unwrap_or_else(|| case.theorem().default_tolerance());
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    if let Err(e) = case.validate() {
        return Ok(VerificationReport::unevaluated(case, e.to_string()));
    }
    let mut notes: Vec<String> = errata_note(case).into_iter().collect();
    let rhs_value = match case.transform {
        Transform::FracFourier { .. } => rhs_frft(case),
        _ => closed_form(case)
            .and_then(|f| f.eval())
            .map(|r| SeriesResult {
                value: Complex64::new(r.value, 0.0),
                terms_used: r.terms_used,
                tail_estimate: r.tail_estimate,
            }),
    };
    let rhs = match rhs_value {
        Ok(r) => r,
        Err(e) => {
            notes.push(error_note(&e));
            return Ok(VerificationReport::unevaluated(case, notes.join("; ")));
        }
    };
    let lhs = match lhs(case) {
        Ok(l) => l,
        Err(e) => {
            notes.push(error_note(&e));
            let mut report = VerificationReport::unevaluated(case, notes.join("; "));
            report.rhs = Some(rhs.value);
            report.series_terms = Some(rhs.terms_used);
            return Ok(report);
        }
    };
    let compared = match case.transform {
        Transform::FracFourier { .. } => {
            if let Ok(cont) = frft_continuation(case) {
                let modulus_gap =
                    (rhs.value.norm() - cont.value.norm()).abs() / cont.value.norm().max(ABS_FLOOR);
                notes.push(format!(
                    "|series| vs |Laplace continuation at s = -i Omega|: rel diff {modulus_gap:.2e}"
                ));
            }
            FRFT_SIGN * lhs.value
        }
        _ => lhs.value,
    };
    let abs_residual = (compared - rhs.value).norm();
    let scale = rhs.value.norm();
    let rel_residual = if scale > 0.0 {
        abs_residual / scale
    } else {
        abs_residual
    };
    let passed = rel_residual <= tol || abs_residual <= ABS_FLOOR;
    Ok(VerificationReport {
        theorem: case.theorem(),
        params: case.params(),
        lhs: Some(lhs.value),
        rhs: Some(rhs.value),
        abs_residual: Some(abs_residual),
        rel_residual: Some(rel_residual),
        quad_error: Some(lhs.error_estimate),
        series_terms: Some(rhs.terms_used),
        passed,
        notes: notes.join("; "),
    })
}

/// Verifies `cases` concurrently; reports come back in input order.
pub fn verify_batch(cases: &[TransformCase], tol: Option<f64>) -> Result<Vec<VerificationReport>> {
    cases.par_iter().map(|c| verify(c, tol)).collect()
}
