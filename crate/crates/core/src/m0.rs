//! The elliptic-arc body `M₀(a)`.
//!
//! Start from the square `S₀` with vertices `(±1/√2, ±1/√2)` and replace its
//! horizontal edges by the arcs of the ellipse `x²/a² + y²/b²= 1`,
//! `b = a/√(2a² − 1)`, that pass through those vertices; the vertical
//! edges get the same arcs rotated by 90°. The Holmes–Thompson objective
//! `g(a) = λ(M₀°)(λ(M₀) + 4)/π` peaks near `a ≈ 1.618`.

use crate::body::{ConvexBody, Point};
use crate::error::{GeomError, Result};
use crate::optimize::golden_section_max;
use crate::scalar::Scalar;

/// Samples per arc for reported values.
pub const ARC_RESOLUTION: usize = 4096;
/// Samples per arc inside the search loop.
pub const SEARCH_RESOLUTION: usize = 512;
/// Fewest samples per arc accepted.
pub const MIN_RESOLUTION: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct M0Params<T> {
    a: T,
    resolution: usize,
}

impl<T: Scalar> M0Params<T> {
    pub fn new(a: T, resolution: usize) -> Result<Self> {
        if !(a > T::one()) || !a.is_finite() {
            return Err(GeomError::BadParameter(format!("a must exceed 1, got {a}")));
        }
        if resolution < MIN_RESOLUTION {
            return Err(GeomError::BadParameter(format!(
                "need at least {MIN_RESOLUTION} samples per arc, got {resolution}"
            )));
        }
        Ok(Self { a, resolution })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.a / (T::of(2.0) * self.a * self.a - T::one()).sqrt()
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// Parameter angle of the vertex `(1/√2, 1/√2)` on the ellipse.
    fn vertex_angle(&self) -> T {
        let s = T::FRAC_1_SQRT_2();
        (s / self.b()).atan2(s / self.a)
    }

    /// `λ(M₀)` in closed form: `S₀` plus four elliptic segments.
    pub fn exact_area(&self) -> T {
        let alpha = T::FRAC_PI_2() - self.vertex_angle();
        T::of(2.0) + T::of(4.0) * self.a * self.b() * (alpha - alpha.sin() * alpha.cos())
    }
}

pub fn m0_body<T: Scalar>(params: &M0Params<T>) -> Result<ConvexBody<T>> {
    let (a, b) = (params.a, params.b());
    let t0 = params.vertex_angle();
    let n = params.resolution;
    let span = T::PI() - t0 - t0;
    let top: Vec<Point<T>> = (0..n)
        .map(|k| {
            let t = t0 + span * T::of_usize(k) / T::of_usize(n);
            Point::new(a * t.cos(), b * t.sin())
        })
        .collect();
    let mut pts = Vec::with_capacity(4 * n);
    let mut arc = top;
    for _ in 0..4 {
        pts.extend_from_slice(&arc);
        arc = arc.iter().map(|p| p.perp()).collect();
    }
    ConvexBody::from_points(&pts)
}

/// `g(a)` at the given arc resolution.
pub fn m0_objective_at<T: Scalar>(a: T, resolution: usize) -> Result<T> {
    let body = m0_body(&M0Params::new(a, resolution)?)?;
    Ok(body.polar()?.area() * (body.area() + T::of(4.0)) / T::PI())
}

/// `g(a)` with 4096 samples per arc.
pub fn m0_objective<T: Scalar>(a: T) -> Result<T> {
    m0_objective_at(a, ARC_RESOLUTION)
}

/// Golden-section maximization of `g` over `[lo, hi]` to parameter
/// tolerance `tol`, run at 512 samples per arc and re-evaluated at 4096.
pub fn m0_search<T: Scalar>(lo: T, hi: T, tol: T) -> Result<(T, T)> {
    let bad = |reason: &str| GeomError::BadBracket {
        lo: lo.to_f64_lossy(),
        hi: hi.to_f64_lossy(),
        reason: reason.into(),
    };
    if !(lo > T::one()) {
        return Err(bad("lower end must exceed 1"));
    }
    if !(hi > lo) || !hi.is_finite() {
        return Err(bad("upper end must exceed the lower end"));
    }
    if !(tol >= T::of(1e-8)) {
        return Err(bad("tolerance must be at least 1e-8"));
    }
    let (a, _) = golden_section_max(
        |a| m0_objective_at(a, SEARCH_RESOLUTION).unwrap_or(T::neg_infinity()),
        lo,
        hi,
        tol,
    );
    Ok((a, m0_objective(a)?))
}
