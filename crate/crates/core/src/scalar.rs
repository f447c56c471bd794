//! Floating-point abstraction shared by every kernel.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar the geometry kernels are written against.
///
/// Implemented for `f32` and `f64`. Tolerances are per-type: the `f64`
/// values are the ones every documented tolerance refers to, the `f32`
/// values are loosened in proportion to the shorter mantissa.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Default + Debug + Display + Send + Sync + 'static
{
    /// Absolute tolerance on cross products and areas for convexity and
    /// nondegeneracy.
    fn geom_eps() -> Self;

    /// Minimum distance from the origin to the boundary for polar and
    /// radial computations.
    fn interior_margin() -> Self;

    /// Slack for containment and boundary-membership checks.
    fn contain_eps() -> Self;

    /// Tolerance for the o-symmetry check, relative to the diameter.
    fn symmetry_eps() -> Self;

    /// Converts an `f64` literal.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Converts a count.
    #[inline]
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn geom_eps() -> Self {
        1e-12
    }
    fn interior_margin() -> Self {
        1e-9
    }
    fn contain_eps() -> Self {
        1e-9
    }
    fn symmetry_eps() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    fn geom_eps() -> Self {
        1e-6
    }
    fn interior_margin() -> Self {
        1e-5
    }
    fn contain_eps() -> Self {
        1e-4
    }
    fn symmetry_eps() -> Self {
        1e-4
    }
}
