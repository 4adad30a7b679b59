//! Numerics for the generalized Galué-type Struve function (GTSF).
//!
//! The crate evaluates
//!
//! ```text
//! aW(z) = Σ_k (−c)^k / [Γ(λk + μ) Γ(ak + p/ξ + (b+2)/2)] · (z/2)^{2k+p+1}
//! ```
//!
//! together with the Fox–Wright series pΨq that expresses its integral
//! transforms in closed form, and checks those closed forms against direct
//! quadrature of the defining integrals (Euler, Laplace, Whittaker, K and
//! fractional Fourier transforms).
//!
//! Layout:
//!
//! * [`special`]: log-gamma, reciprocal gamma and beta for real/complex input.
//! * [`wright`]: Fox–Wright series summation with a convergence gate.
//! * [`gtsf`]: the GTSF itself and its Struve-type reductions.
//! * [`kernels`]: ₁F₁, Whittaker M/W and Bessel K kernels.
//! * [`quad`]: adaptive Gauss–Legendre/Gauss–Jacobi quadrature.
//! * [`verify`]: closed-form right-hand sides, quadrature left-hand sides
//!   and verification reports.
//! * [`report`]: the report document shared with the CLI.
//! * [`sweep`]: parameter grids.
//! * [`errata`]: misprints in the published identities.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod errata;
mod error;
pub mod gtsf;
pub mod kernels;
pub mod quad;
pub mod report;
mod series;
pub mod special;
pub mod struve;
pub mod sweep;
mod value;
pub mod verify;
pub mod wright;

pub use error::{Error, Result};

pub use num_complex::Complex64;
pub use series::{SeriesResult, DEFAULT_MAX_TERMS, DEFAULT_TOL};
pub use value::Value;

pub use gtsf::{eval_gtsf, eval_h_pbc, GtsfParams};
pub use verify::{verify, Theorem, Transform, TransformCase, VerificationReport};
pub use wright::{eval_wright, kappa, WrightParams};

/// Complex numbers as used at the API boundary.
pub type ComplexValue = Complex64;

/// Version string written into report documents.
pub const TOOL_VERSION: &str = concat!("gtsf ", env!("CARGO_PKG_VERSION"));
