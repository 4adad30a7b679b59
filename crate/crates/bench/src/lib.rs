//! Inputs shared by the gtsf-core benchmarks.

use gtsf_core::verify::{Theorem, TransformCase};
use gtsf_core::{GtsfParams, WrightParams};

/// H_{0,1,1}: the classical Struve H₀ through the general path.
pub fn struve_h0() -> GtsfParams {
    GtsfParams::reduced(0.0, 1.0, 1.0)
}

/// A non-reduced parameter set with a = 2.
pub fn non_reduced() -> GtsfParams {
    GtsfParams {
        a: 2,
        p: 0.5,
        b: 1.0,
        c: -1.0,
        lambda: 2.0,
        mu: 1.2,
        xi: 1.5,
    }
}

/// ₁Ψ₁[(1,1);(1,1)], the exponential.
pub fn exponential() -> WrightParams {
    WrightParams::new(&[(1.0, 1.0)], &[(1.0, 1.0)]).expect("valid pairs")
}

/// The canonical case of every theorem.
pub fn canonical_cases() -> Vec<TransformCase> {
    Theorem::ALL
        .into_iter()
        .map(TransformCase::canonical)
        .collect()
}
