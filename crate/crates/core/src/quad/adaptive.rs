use super::rules::gauss_jacobi;
use super::{QuadratureResult, QuadratureSpec};
use crate::error::{domain, ensure_finite, Error, Result};
use crate::value::Value;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Multiple of eps·Σ|w f| below which panel differences are rounding noise.
/// The sum is further scaled by 1 + |t|/width, since nodes far from the origin
/// carry an absolute position error of order eps·|t|.
const ROUNDING_FLOOR: f64 = 50.0 * f64::EPSILON;

/// ∫_a^b (t − a)^A (b − t)^B f(t) dt with an absorbed weight on the end panels.
pub(crate) struct Weighted {
    pub a: f64,
    pub b: f64,
    pub left: f64,
    pub right: f64,
}

struct Estimate<T> {
    value: T,
    mass: f64,
}

impl Weighted {
    fn panel<T: Value>(
        &self,
        f: &mut impl FnMut(f64) -> Result<T>,
        u: f64,
        v: f64,
        n: usize,
        evaluations: &mut usize,
    ) -> Result<Estimate<T>> {
        let left_abs = u == self.a && self.left != 0.0;
        let right_abs = v == self.b && self.right != 0.0;
        let rule = gauss_jacobi(
            n,
            if left_abs { self.left } else { 0.0 },
            if right_abs { self.right } else { 0.0 },
        )?;
        let h = v - u;
        let mut exponent = 1.0;
        if left_abs {
            exponent += self.left;
        }
        if right_abs {
            exponent += self.right;
        }
        let scale = if exponent == 1.0 { h } else { h.powf(exponent) };
        let mut value = T::zero();
        let mut comp = T::zero();
        let mut mass = 0.0;
        for (&s, &w) in rule.nodes.iter().zip(&rule.weights) {
            let t = u + h * s;
            let mut weight = w;
            if !left_abs && self.left != 0.0 {
                weight *= (t - self.a).powf(self.left);
            }
            if !right_abs && self.right != 0.0 {
                weight *= (self.b - t).powf(self.right);
            }
            let y = f(t)?;
            if !y.is_finite_value() {
                return Err(Error::NonFiniteIntegrand(t));
            }
            let term = y.scale(weight);
            mass += term.modulus();
            T::compensated_add(&mut value, &mut comp, term);
        }
        *evaluations += rule.len();
        Ok(Estimate {
            value: (value + comp).scale(scale),
            mass: mass * scale.abs(),
        })
    }
}

struct Panel<T> {
    u: f64,
    v: f64,
    left_half: T,
    right_half: T,
    diff: f64,
    floor: f64,
}

impl<T: Value> Panel<T> {
    fn fine(&self) -> T {
        self.left_half + self.right_half
    }

    fn error(&self) -> f64 {
        self.diff.max(self.floor)
    }

    fn refinable_excess(&self) -> f64 {
        self.diff - self.floor
    }
}

struct HeapEntry {
    excess: f64,
    index: usize,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for HeapEntry {}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.excess
            .total_cmp(&other.excess)
            .then_with(|| other.index.cmp(&self.index))
    }
}

fn make_panel<T: Value>(
    w: &Weighted,
    f: &mut impl FnMut(f64) -> Result<T>,
    u: f64,
    v: f64,
    coarse: T,
    n: usize,
    evaluations: &mut usize,
) -> Result<Panel<T>> {
    let m = 0.5 * (u + v);
    let l = w.panel(f, u, m, n, evaluations)?;
    let r = w.panel(f, m, v, n, evaluations)?;
    let fine = l.value + r.value;
    Ok(Panel {
        u,
        v,
        left_half: l.value,
        right_half: r.value,
        diff: (fine - coarse).modulus(),
        floor: ROUNDING_FLOOR * (l.mass + r.mass) * (1.0 + u.abs().max(v.abs()) / (v - u)),
    })
}

/// Global adaptive bisection of [a, b] ⊆ [weighted.a, weighted.b], starting
/// from `initial_panels` equal panels.
pub(crate) fn adaptive<T: Value>(
    f: &mut impl FnMut(f64) -> Result<T>,
    weighted: &Weighted,
    (a, b): (f64, f64),
    spec: &QuadratureSpec,
    initial_panels: usize,
) -> Result<QuadratureResult<T>> {
    let n = spec.points;
    let mut evaluations = 0;
    let mut panels: Vec<Panel<T>> = Vec::new();
    let mut heap = BinaryHeap::new();
    let count = initial_panels.max(1);
    let width = (b - a) / count as f64;
    for i in 0..count {
        let u = if i == 0 { a } else { a + width * i as f64 };
        let v = if i + 1 == count {
            b
        } else {
            a + width * (i + 1) as f64
        };
        let coarse = weighted.panel(f, u, v, n, &mut evaluations)?.value;
        let panel = make_panel(weighted, f, u, v, coarse, n, &mut evaluations)?;
        heap.push(HeapEntry {
            excess: panel.refinable_excess(),
            index: panels.len(),
        });
        panels.push(panel);
    }
    let mut alive = vec![true; panels.len()];
    let mut subdivisions = 0;
    loop {
        let (value, error, refinable) = totals(&panels, &alive);
        let target = spec.abs_tol.max(spec.rel_tol * value.modulus());
        // what is left once refinable error is negligible is rounding noise
        if error <= target || refinable <= 0.1 * target {
            return Ok(QuadratureResult {
                value,
                error_estimate: error,
                evaluations,
                truncation_used: None,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(Error::MaxSubdivisions {
                subdivisions,
                error_estimate: error,
            });
        }
        let Some(entry) = heap.pop() else {
            return Err(Error::MaxSubdivisions {
                subdivisions,
                error_estimate: error,
            });
        };
        let (u, v, lh, rh) = {
            let p = &panels[entry.index];
            (p.u, p.v, p.left_half, p.right_half)
        };
        let m = 0.5 * (u + v);
        if !(m > u && m < v) {
            // cannot bisect further; keep the panel but stop refining it
            let p = &mut panels[entry.index];
            p.floor = p.floor.max(p.diff);
            continue;
        }
        alive[entry.index] = false;
        subdivisions += 1;
        for (pu, pv, coarse) in [(u, m, lh), (m, v, rh)] {
            let child = make_panel(weighted, f, pu, pv, coarse, n, &mut evaluations)?;
            heap.push(HeapEntry {
                excess: child.refinable_excess(),
                index: panels.len(),
            });
            panels.push(child);
            alive.push(true);
        }
    }
}

fn totals<T: Value>(panels: &[Panel<T>], alive: &[bool]) -> (T, f64, f64) {
    let mut sum = T::zero();
    let mut comp = T::zero();
    let mut error = 0.0;
    let mut refinable = 0.0;
    for (p, _) in panels.iter().zip(alive).filter(|(_, &a)| a) {
        T::compensated_add(&mut sum, &mut comp, p.fine());
        error += p.error();
        refinable += p.refinable_excess().max(0.0);
    }
    (sum + comp, error, refinable)
}

/// ∫_a^b (t − a)^A (b − t)^B f(t) dt with (A, B) = `spec.endpoint_exponents`.
pub fn integrate_finite<T: Value>(
    mut f: impl FnMut(f64) -> Result<T>,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult<T>> {
    spec.validate()?;
    ensure_finite("a", a)?;
    ensure_finite("b", b)?;
    if !(a < b) {
        return Err(domain(format!(
            "integration interval needs a < b, got [{a}, {b}]"
        )));
    }
    let weighted = Weighted {
        a,
        b,
        left: spec.endpoint_exponents.0,
        right: spec.endpoint_exponents.1,
    };
    adaptive(&mut f, &weighted, (a, b), spec, 1)
}
