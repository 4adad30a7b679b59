use num_complex::Complex64;
use std::ops::{Add, Sub};

/// Scalar types that series and quadrature routines can accumulate.
pub trait Value: Copy + Add<Output = Self> + Sub<Output = Self> + Send + Sync + 'static {
    fn zero() -> Self;
    fn modulus(self) -> f64;
    fn scale(self, factor: f64) -> Self;
    fn is_finite_value(self) -> bool;
    fn into_complex(self) -> Complex64;

    /// Neumaier-compensated `sum += x`.
    fn compensated_add(sum: &mut Self, comp: &mut Self, x: Self);
}

#[inline]
fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl Value for f64 {
    fn zero() -> Self {
        0.0
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn scale(self, factor: f64) -> Self {
        self * factor
    }
    fn is_finite_value(self) -> bool {
        self.is_finite()
    }
    fn into_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
    fn compensated_add(sum: &mut Self, comp: &mut Self, x: Self) {
        neumaier(sum, comp, x);
    }
}

impl Value for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn scale(self, factor: f64) -> Self {
        self * factor
    }
    fn is_finite_value(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn into_complex(self) -> Complex64 {
        self
    }
    fn compensated_add(sum: &mut Self, comp: &mut Self, x: Self) {
        neumaier(&mut sum.re, &mut comp.re, x.re);
        neumaier(&mut sum.im, &mut comp.im, x.im);
    }
}
