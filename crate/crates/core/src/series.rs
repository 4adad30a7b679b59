use crate::error::{Error, Result};
use crate::value::Value;
use serde::{Deserialize, Serialize};

/// Default relative stopping tolerance for series summation.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Default cap on the number of series terms.
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Number of consecutive small terms required by the stopping rule.
pub(crate) const CONSECUTIVE_SMALL: usize = 3;

/// A summed series together with its truncation bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult<T> {
    pub value: T,
    pub terms_used: usize,
    /// Estimated |true value − value|: the geometric tail bound from the last
    /// term ratio plus a bound on accumulated rounding.
    pub tail_estimate: f64,
}

impl<T: Value> SeriesResult<T> {
    pub(crate) fn map_scale(self, factor: f64) -> Self {
        SeriesResult {
            value: self.value.scale(factor),
            terms_used: self.terms_used,
            tail_estimate: self.tail_estimate * factor.abs(),
        }
    }
}

/// Running partial sum implementing the shared stopping rule:
/// stop once |term_k| ≤ tol·|S_k| holds for three consecutive k at or beyond
/// `burn_in` (the index past which no gamma argument can still be at a pole).
pub(crate) struct SeriesSum<T> {
    sum: T,
    comp: T,
    tol: f64,
    burn_in: usize,
    small_run: usize,
    terms: usize,
    prev_abs: f64,
    last_abs: f64,
    rounding: f64,
}

impl<T: Value> SeriesSum<T> {
    pub(crate) fn new(tol: f64, burn_in: usize) -> Self {
        SeriesSum {
            sum: T::zero(),
            comp: T::zero(),
            tol,
            burn_in,
            small_run: 0,
            terms: 0,
            prev_abs: f64::NAN,
            last_abs: f64::NAN,
            rounding: 0.0,
        }
    }

    /// Adds term number `self.terms()`. `term_error` bounds the absolute error
    /// of the term itself. Returns `true` when the stopping rule is satisfied.
    pub(crate) fn push(&mut self, term: T, term_error: f64) -> bool {
        let k = self.terms;
        T::compensated_add(&mut self.sum, &mut self.comp, term);
        self.terms += 1;
        self.prev_abs = self.last_abs;
        self.last_abs = term.modulus();
        self.rounding += term_error + f64::EPSILON * self.last_abs;
        let total = (self.sum + self.comp).modulus();
        if k >= self.burn_in && self.last_abs <= self.tol * total {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        self.small_run >= CONSECUTIVE_SMALL
    }

    pub(crate) fn terms(&self) -> usize {
        self.terms
    }

    pub(crate) fn value(&self) -> T {
        self.sum + self.comp
    }

    pub(crate) fn finish(self) -> SeriesResult<T> {
        let ratio = self.last_abs / self.prev_abs;
        let truncation = if self.last_abs == 0.0 {
            0.0
        } else if ratio.is_finite() && ratio < 1.0 {
            self.last_abs * ratio / (1.0 - ratio)
        } else {
            self.last_abs
        };
        let value = self.value();
        SeriesResult {
            value,
            terms_used: self.terms,
            tail_estimate: truncation + self.rounding + f64::EPSILON * value.modulus(),
        }
    }

    pub(crate) fn non_convergence(&self) -> Error {
        Error::NonConvergence { terms: self.terms }
    }
}

/// Runs `next_term(k)` through the stopping rule until it is met or
/// `max_terms` is exhausted. `next_term` returns the term and its error bound.
pub(crate) fn sum_series<T: Value>(
    tol: f64,
    max_terms: usize,
    burn_in: usize,
    mut next_term: impl FnMut(usize) -> Result<(T, f64)>,
) -> Result<SeriesResult<T>> {
    let mut acc = SeriesSum::new(tol, burn_in);
    while acc.terms() < max_terms {
        let (term, err) = next_term(acc.terms())?;
        if !term.is_finite_value() {
            return Err(Error::EvaluationUnstable(format!(
                "non-finite series term at k = {}",
                acc.terms()
            )));
        }
        if acc.push(term, err) {
            return Ok(acc.finish());
        }
    }
    Err(acc.non_convergence())
}

/// Validates a stopping tolerance.
pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_stops_and_bounds_tail() {
        let r = 0.5f64;
        let res = sum_series(1e-12, 1000, 0, |k| Ok((r.powi(k as i32), 0.0))).unwrap();
        assert!((res.value - 2.0).abs() <= res.tail_estimate);
        assert!(res.terms_used > 30 && res.terms_used < 60);
    }

    #[test]
    fn zero_terms_before_burn_in_do_not_stop() {
        // first five terms vanish (denominator poles), then a real series starts
        let res = sum_series(1e-12, 1000, 5, |k| {
            Ok((
                if k < 5 {
                    0.0
                } else {
                    0.5f64.powi(k as i32 - 5)
                },
                0.0,
            ))
        })
        .unwrap();
        assert!((res.value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn exhausting_terms_is_an_error() {
        let err = sum_series(1e-12, 10, 0, |_| Ok((1.0, 0.0))).unwrap_err();
        assert_eq!(err, Error::NonConvergence { terms: 10 });
    }
}
