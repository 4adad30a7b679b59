//! Parameter grids of the default acceptance sweep.

use super::case::{Theorem, Transform, TransformCase};
use crate::gtsf::GtsfParams;

fn reduced(p: f64, c: f64) -> GtsfParams {
    GtsfParams::reduced(p, 1.0, c)
}

/// λ = 2, a = 2, μ = 1.2, ξ = 1.5, b = 1.
fn non_reduced(p: f64, c: f64) -> GtsfParams {
    GtsfParams {
        a: 2,
        p,
        b: 1.0,
        c,
        lambda: 2.0,
        mu: 1.2,
        xi: 1.5,
    }
}

pub fn euler_grid() -> Vec<TransformCase> {
    let mut out = Vec::new();
    for &p in &[0.0, 0.5, 1.5] {
        for &(r, s) in &[(2.0, 3.0), (1.5, 2.5), (0.7, 0.8)] {
            for &c in &[1.0, -1.0] {
                out.push(TransformCase::new(
                    reduced(p, c),
                    1.0,
                    Transform::Euler { r, s },
                ));
            }
        }
    }
    out.push(TransformCase::new(
        non_reduced(0.5, 1.0),
        1.0,
        Transform::Euler { r: 2.0, s: 3.0 },
    ));
    out
}

pub fn laplace_grid() -> Vec<TransformCase> {
    let mut out = Vec::new();
    for gtsf in [reduced as fn(f64, f64) -> GtsfParams, non_reduced] {
        for &s in &[2.0, 3.0, 10.0] {
            for &c in &[1.0, -1.0] {
                for &p in &[0.0, 0.5] {
                    out.push(TransformCase::new(
                        gtsf(p, c),
                        1.0,
                        Transform::Laplace { s },
                    ));
                }
            }
        }
    }
    out
}

pub fn whittaker_grid() -> Vec<TransformCase> {
    let mut out = Vec::new();
    for &(tau, omega, zeta) in &[(0.2, 0.3, 1.5), (-0.1, 0.25, 2.0)] {
        for &c in &[1.0, -1.0] {
            out.push(TransformCase::new(
                reduced(0.5, c),
                0.25,
                Transform::Whittaker { zeta, tau, omega },
            ));
        }
    }
    out
}

pub fn ktransform_grid() -> Vec<TransformCase> {
    let mut out = Vec::new();
    for &(rho, nu, omega) in &[(1.5, 0.3, 2.0), (2.0, 0.5, 1.0)] {
        for &c in &[1.0, -1.0] {
            out.push(TransformCase::new(
                reduced(0.5, c),
                0.25,
                Transform::KTransform { rho, nu, omega },
            ));
        }
    }
    out
}

pub fn frft_grid() -> Vec<TransformCase> {
    let mut out = Vec::new();
    for &(order, omega) in &[(1.0, 1.0), (0.8, 1.5)] {
        for &p in &[0.0, 0.5] {
            out.push(TransformCase::new(
                reduced(p, 1.0),
                0.25,
                Transform::FracFourier { order, omega },
            ));
        }
    }
    out
}

/// The grid of one theorem.
pub fn grid(theorem: Theorem) -> Vec<TransformCase> {
    match theorem {
        Theorem::Euler => euler_grid(),
        Theorem::Laplace => laplace_grid(),
        Theorem::Whittaker => whittaker_grid(),
        Theorem::KTransform => ktransform_grid(),
        Theorem::FracFourier => frft_grid(),
    }
}

/// Every grid, in theorem order.
pub fn acceptance_cases() -> Vec<TransformCase> {
    Theorem::ALL.into_iter().flat_map(grid).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(euler_grid().len(), 19);
        assert_eq!(laplace_grid().len(), 24);
        assert_eq!(whittaker_grid().len(), 4);
        assert_eq!(ktransform_grid().len(), 4);
        assert_eq!(frft_grid().len(), 4);
        assert_eq!(acceptance_cases().len(), 55);
    }

    #[test]
    fn all_cases_are_valid() {
        for case in acceptance_cases() {
            case.validate().unwrap_or_else(|e| panic!("{case:?}: {e}"));
        }
    }
}
