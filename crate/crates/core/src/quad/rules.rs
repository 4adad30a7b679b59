//! Gauss rules on [0, 1] for the weight s^A (1 − s)^B.
//!
//! Nodes are the eigenvalues of the Jacobi matrix of the orthogonal family,
//! located by Sturm-sequence bisection; weights follow from the Christoffel
//! numbers 1 / Σ q_k(x_i)² of the orthonormal polynomials.

use crate::error::{domain, Result};
use crate::special::beta;
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

/// A Gauss rule for ∫₀¹ s^A (1 − s)^B g(s) ds.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Recurrence coefficients of the monic Jacobi polynomials for the weight
/// (1 − x)^α (1 + x)^β on [−1, 1]: diagonal a_k and squared off-diagonal b_k.
fn jacobi_recurrence(n: usize, alpha: f64, beta: f64) -> (Vec<f64>, Vec<f64>) {
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n);
    let ab = alpha + beta;
    for k in 0..n {
        let kf = k as f64;
        let d = if k == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            let t = 2.0 * kf + ab;
            (beta * beta - alpha * alpha) / (t * (t + 2.0))
        };
        diag.push(d);
        if k == 0 {
            off.push(0.0);
        } else if k == 1 {
            off.push(4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab).powi(2) * (3.0 + ab)));
        } else {
            let t = 2.0 * kf + ab;
            off.push(
                4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab) / (t * t * (t + 1.0) * (t - 1.0)),
            );
        }
    }
    (diag, off)
}

/// Number of eigenvalues of the symmetric tridiagonal matrix below x.
fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0f64;
    for k in 0..diag.len() {
        let b = if k == 0 { 0.0 } else { off[k] };
        q = diag[k] - x - if k == 0 { 0.0 } else { b / q };
        if q == 0.0 {
            q = -f64::EPSILON * (1.0 + x.abs());
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The i-th smallest eigenvalue, bracketed in [−1, 1].
fn eigenvalue(diag: &[f64], off: &[f64], i: usize) -> f64 {
    let (mut lo, mut hi) = (-1.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(diag, off, mid) > i {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

fn compute_rule(n: usize, left: f64, right: f64) -> GaussRule {
    // s = (1 + x)/2 maps s^left (1−s)^right to (1+x)^left (1−x)^right
    let (diag, off) = jacobi_recurrence(n, right, left);
    let mu0 = beta(left + 1.0, right + 1.0).expect("exponents above -1");
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let x = eigenvalue(&diag, &off, i);
        let (mut q_prev, mut q) = (0.0, 1.0);
        let mut norm = 1.0;
        for k in 0..n - 1 {
            let next = ((x - diag[k]) * q - if k == 0 { 0.0 } else { off[k].sqrt() * q_prev })
                / off[k + 1].sqrt();
            q_prev = q;
            q = next;
            norm += q * q;
        }
        nodes.push(0.5 * (1.0 + x));
        weights.push(mu0 / norm);
    }
    GaussRule { nodes, weights }
}

type RuleKey = (usize, u64, u64);

thread_local! {
    static RULE_CACHE: RefCell<HashMap<RuleKey, Arc<GaussRule>>> = RefCell::new(HashMap::new());
}

const RULE_CACHE_LIMIT: usize = 256;

/// The n-point Gauss rule for ∫₀¹ s^left (1 − s)^right g(s) ds. Rules are
/// memoized per thread.
pub fn gauss_jacobi(n: usize, left: f64, right: f64) -> Result<Arc<GaussRule>> {
    if n == 0 {
        return Err(domain("a Gauss rule needs at least one point"));
    }
    if !(left > -1.0 && right > -1.0) || !left.is_finite() || !right.is_finite() {
        return Err(domain(format!(
            "endpoint exponents must exceed -1, got ({left}, {right})"
        )));
    }
    let key = (n, left.to_bits(), right.to_bits());
    RULE_CACHE.with(|cache| {
        let mut cache = cache.borrow_mut();
        if let Some(rule) = cache.get(&key) {
            return Ok(Arc::clone(rule));
        }
        if cache.len() >= RULE_CACHE_LIMIT {
            cache.clear();
        }
        let rule = Arc::new(compute_rule(n, left, right));
        cache.insert(key, Arc::clone(&rule));
        Ok(rule)
    })
}

/// The n-point Gauss–Legendre rule on [0, 1].
pub fn gauss_legendre(n: usize) -> Result<Arc<GaussRule>> {
    gauss_jacobi(n, 0.0, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_is_exact_for_degree_2n_minus_1() {
        for &n in &[2usize, 4, 8, 20] {
            let rule = gauss_legendre(n).unwrap();
            let deg = 2 * n - 1;
            let q: f64 = rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .map(|(x, w)| w * x.powi(deg as i32))
                .sum();
            let exact = 1.0 / (deg as f64 + 1.0);
            assert!(((q - exact) / exact).abs() < 1e-14, "n={n}: {q} vs {exact}");
        }
    }

    #[test]
    fn two_point_legendre_nodes() {
        let rule = gauss_legendre(2).unwrap();
        let d = 0.5 / 3f64.sqrt();
        assert!((rule.nodes[0] - (0.5 - d)).abs() < 1e-16);
        assert!((rule.nodes[1] - (0.5 + d)).abs() < 1e-16);
        assert!((rule.weights[0] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn jacobi_moments() {
        // ∫₀¹ s^A (1−s)^B s^m ds = B(A+m+1, B+1)
        for &(a, b) in &[(-0.5, 0.0), (0.0, -0.5), (1.5, -0.3), (-0.7, 2.0)] {
            let rule = gauss_jacobi(10, a, b).unwrap();
            for m in 0..19 {
                let q: f64 = rule
                    .nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(|(x, w)| w * x.powi(m))
                    .sum();
                let exact = beta(a + m as f64 + 1.0, b + 1.0).unwrap();
                assert!(((q - exact) / exact).abs() < 1e-13, "({a},{b}) m={m}");
            }
        }
    }

    #[test]
    fn nodes_are_sorted_and_inside() {
        let rule = gauss_jacobi(20, -0.9, 3.0).unwrap();
        assert!(rule.nodes.windows(2).all(|w| w[0] < w[1]));
        assert!(rule.nodes[0] > 0.0 && rule.nodes[19] < 1.0);
        assert!(rule.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn rejects_non_integrable_exponents() {
        assert!(gauss_jacobi(4, -1.0, 0.0).is_err());
        assert!(gauss_jacobi(0, 0.0, 0.0).is_err());
    }
}
