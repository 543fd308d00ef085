//! Floating-point scalar abstraction for the whole crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar type the library is generic over: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Default tolerance for validity checks (Hermiticity, unit trace).
    fn validation_tol() -> Self;

    /// Default threshold below which a partial-transpose eigenvalue counts
    /// as negative.
    fn negativity_tol() -> Self;

    /// Shorthand for lossy conversion from `f64` literals.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 conversion")
    }

    /// Shorthand for conversion from small integer counts.
    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("usize conversion")
    }
}

impl Scalar for f64 {
    fn validation_tol() -> Self {
        1e-12
    }

    fn negativity_tol() -> Self {
        1e-10
    }
}

impl Scalar for f32 {
    fn validation_tol() -> Self {
        1e-5
    }

    fn negativity_tol() -> Self {
        1e-5
    }
}
