//! Kernel functions of the transforms: ₁F₁, Whittaker M and W, Bessel K.

mod bessel;
mod kummer;
mod whittaker;

pub use bessel::bessel_k;
pub use kummer::kummer_1f1;
pub use whittaker::{whittaker_m, whittaker_w, WhittakerIndices};
