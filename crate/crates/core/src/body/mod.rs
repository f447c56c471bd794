//! Geometry kernel for plane convex bodies.
//!
//! A [`ConvexBody`] is a strictly convex counterclockwise vertex cycle with
//! its shoelace area cached. Smooth bodies (disks, ellipses, elliptic-arc
//! bodies) are represented by inscribed N-gons; every algorithm downstream
//! is exact for polygons, so the only discretization error is the O(1/N²)
//! area deficit of the N-gon itself.
//!
//! Bodies are validated once, at construction, and are immutable after.

mod affine;
mod hull;
mod ops;
mod point;
mod shape;

pub use affine::AffineMap;
pub use hull::convex_hull;
pub use ops::{intersect, BoundaryParam, GaugeIndex};
pub use point::{Direction, Point};
pub use shape::{make_shape, ShapeSpec};

use crate::error::{GeomError, Result};
use crate::scalar::Scalar;

/// A bounded plane convex region with nonempty interior.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexBody<T> {
    vertices: Vec<Point<T>>,
    area: T,
}

impl<T: Scalar> ConvexBody<T> {
    /// Convex hull of `points`, counterclockwise, with duplicate and
    /// collinear vertices removed.
    ///
    /// Fails with `DegenerateBody` when the hull has area `<= 1e-12` or any
    /// coordinate is not finite.
    pub fn from_points(points: &[Point<T>]) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| !p.is_finite()) {
            return Err(GeomError::DegenerateBody(format!(
                "non-finite coordinate ({}, {})",
                p.x, p.y
            )));
        }
        if points.len() < 3 {
            return Err(GeomError::DegenerateBody(format!(
                "{} points cannot span a body",
                points.len()
            )));
        }
        let vertices = convex_hull(points);
        if vertices.len() < 3 {
            return Err(GeomError::DegenerateBody("points are collinear".into()));
        }
        let area = shoelace(&vertices);
        if !(area > T::geom_eps()) {
            return Err(GeomError::DegenerateBody(format!("hull area {:e}", area.to_f64_lossy())));
        }
        Ok(Self { vertices, area })
    }

    #[inline]
    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn area(&self) -> T {
        self.area
    }

    /// Edges `(v_i, v_{i+1})` in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (Point<T>, Point<T>)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Support function `h(v) = max ⟨x, v⟩`; `v` need not be a unit vector.
    pub fn support(&self, v: Point<T>) -> T {
        self.vertices
            .iter()
            .map(|p| p.dot(v))
            .fold(T::neg_infinity(), T::max)
    }

    #[inline]
    pub fn support_dir(&self, u: &Direction<T>) -> T {
        self.support(u.vector())
    }

    /// A vertex attaining the support value in direction `v`.
    pub fn support_point(&self, v: Point<T>) -> Point<T> {
        let mut best = self.vertices[0];
        let mut best_dot = best.dot(v);
        for &p in &self.vertices[1..] {
            let d = p.dot(v);
            if d > best_dot {
                best = p;
                best_dot = d;
            }
        }
        best
    }

    /// `h(u) + h(-u)`.
    pub fn width(&self, u: Point<T>) -> T {
        self.support(u) + self.support(-u)
    }

    pub fn perimeter(&self) -> T {
        self.edges().map(|(a, b)| a.distance(b)).sum()
    }

    /// Area centroid.
    pub fn centroid(&self) -> Point<T> {
        let base = self.vertices[0];
        let mut acc = Point::origin();
        let mut twice_area = T::zero();
        for w in self.vertices[1..].windows(2) {
            let (a, b) = (w[0] - base, w[1] - base);
            let c = a.cross(b);
            twice_area = twice_area + c;
            acc += (a + b) * c;
        }
        base + acc / (T::of(3.0) * twice_area)
    }

    /// Largest vertex-to-vertex distance.
    pub fn diameter(&self) -> T {
        let v = &self.vertices;
        let mut best = T::zero();
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                best = best.max((v[i] - v[j]).norm_sq());
            }
        }
        best.sqrt()
    }

    /// Signed distance from `p` to the nearest edge line: positive inside.
    pub fn interior_margin_of(&self, p: Point<T>) -> T {
        self.edges()
            .map(|(a, b)| {
                let e = b - a;
                e.cross(p - a) / e.norm()
            })
            .fold(T::infinity(), T::min)
    }

    /// Distance from the origin to the boundary, negative if outside.
    pub fn origin_margin(&self) -> T {
        self.interior_margin_of(Point::origin())
    }

    pub(crate) fn require_origin_interior(&self) -> Result<()> {
        let margin = self.origin_margin();
        if margin > T::interior_margin() {
            Ok(())
        } else {
            Err(GeomError::OriginNotInterior {
                margin: margin.to_f64_lossy(),
            })
        }
    }

    pub fn contains(&self, p: Point<T>, slack: T) -> bool {
        self.interior_margin_of(p) >= -slack
    }

    /// Euclidean distance from `p` to the body (zero inside).
    pub fn distance_to(&self, p: Point<T>) -> T {
        if self.interior_margin_of(p) >= T::zero() {
            return T::zero();
        }
        self.edges()
            .map(|(a, b)| p.distance_to_segment(a, b))
            .fold(T::infinity(), T::min)
    }

    /// Radial function `ρ(u) = max{t ≥ 0 : t·u ∈ B}`.
    pub fn radial(&self, u: &Direction<T>) -> Result<T> {
        self.require_origin_interior()?;
        Ok(T::one() / self.gauge_unchecked(u.vector()))
    }

    /// Minkowski functional `‖z‖_B = min{t ≥ 0 : z ∈ t·B}`.
    pub fn gauge(&self, z: Point<T>) -> Result<T> {
        self.require_origin_interior()?;
        Ok(self.gauge_unchecked(z))
    }

    pub(crate) fn gauge_unchecked(&self, z: Point<T>) -> T {
        if z.x == T::zero() && z.y == T::zero() {
            return T::zero();
        }
        // The sector of the edge hit by the ray through z; the origin is
        // interior so every vertex pair (a, b) has a × b > 0.
        for (a, b) in self.edges() {
            if a.cross(z) >= T::zero() && z.cross(b) >= T::zero() {
                return z.cross(b - a) / a.cross(b);
            }
        }
        // Unreachable for a valid body; fall back to the polar support.
        self.edges()
            .map(|(a, b)| z.cross(b - a) / a.cross(b))
            .fold(T::neg_infinity(), T::max)
    }

    pub fn translate(&self, v: Point<T>) -> Self {
        Self {
            vertices: self.vertices.iter().map(|&p| p + v).collect(),
            area: self.area,
        }
    }

    /// Homothety about the origin; `s` must be nonzero.
    pub fn scale(&self, s: T) -> Self {
        Self {
            vertices: self.vertices.iter().map(|&p| p * s).collect(),
            area: self.area * s * s,
        }
    }

    /// The reflection `-B`.
    pub fn negate(&self) -> Self {
        Self {
            vertices: self.vertices.iter().map(|&p| -p).collect(),
            area: self.area,
        }
    }

    pub fn rotate(&self, angle: T) -> Self {
        Self {
            vertices: self.vertices.iter().map(|&p| p.rotate(angle)).collect(),
            area: self.area,
        }
    }

    /// Rotation by +π/2, exact in floating point.
    pub fn rot90(&self) -> Self {
        Self {
            vertices: self.vertices.iter().map(|&p| p.perp()).collect(),
            area: self.area,
        }
    }

    /// Vertexwise image, re-oriented counterclockwise when `det < 0`.
    pub fn apply_affine(&self, map: &AffineMap<T>) -> Self {
        let mut vertices: Vec<_> = self.vertices.iter().map(|&p| map.apply(p)).collect();
        if map.det() < T::zero() {
            vertices.reverse();
        }
        let area = shoelace(&vertices);
        Self { vertices, area }
    }

    /// Hausdorff distance between `self` and `-self`.
    pub fn asymmetry(&self) -> T {
        self.hausdorff_distance(&self.negate())
    }

    pub fn is_o_symmetric(&self, tol: T) -> bool {
        self.asymmetry() <= tol * T::one().max(self.diameter())
    }

    pub(crate) fn require_symmetric(&self) -> Result<()> {
        let asym = self.asymmetry();
        if asym <= T::symmetry_eps() * T::one().max(self.diameter()) {
            Ok(())
        } else {
            Err(GeomError::NotSymmetric {
                asymmetry: asym.to_f64_lossy(),
            })
        }
    }
}

/// Shoelace area of a counterclockwise cycle.
pub(crate) fn shoelace<T: Scalar>(vertices: &[Point<T>]) -> T {
    if vertices.len() < 3 {
        return T::zero();
    }
    let base = vertices[0];
    let twice: T = vertices[1..]
        .windows(2)
        .map(|w| (w[0] - base).cross(w[1] - base))
        .sum();
    twice / T::of(2.0)
}
