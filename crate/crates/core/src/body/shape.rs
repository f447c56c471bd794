use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::scalar::Scalar;

use super::{ConvexBody, Point};

/// Named constructions.
#[derive(Clone, Debug, PartialEq)]
pub enum ShapeSpec<T> {
    /// Equilateral triangle of circumradius 1 with a vertex at `(1, 0)`.
    Triangle,
    /// `[-1, 1]²`.
    Square,
    /// `conv{±e1 ± w}` with `w = (cos angle, sin angle)`; the square rotated
    /// by 45° (scaled) at `angle = π/2`.
    Parallelogram { angle: T },
    /// Regular hexagon of circumradius `r`, vertices at angles `k·60°`.
    Hexagon { r: T },
    /// N-gon inscribed in the ellipse with semi-axes `a`, `b`.
    Ellipse { a: T, b: T, n: usize },
    /// N-gon inscribed in the unit circle.
    Disk { n: usize },
    /// Hull of `n` points uniform in `[-1, 1]²`.
    Random { n: usize, seed: u64 },
    /// Hull of `n` points uniform in `[-1, 1]²` and their negations.
    RandomSymmetric { n: usize, seed: u64 },
    /// Hull of arbitrary points.
    Polygon(Vec<Point<T>>),
}

/// Smallest vertex count accepted for the smooth shapes.
pub const MIN_SMOOTH_VERTICES: usize = 8;

pub fn make_shape<T: Scalar>(spec: &ShapeSpec<T>) -> Result<ConvexBody<T>> {
    match spec {
        ShapeSpec::Triangle => regular_polygon(3, T::one()),
        ShapeSpec::Square => {
            let (l, o) = (T::one(), -T::one());
            ConvexBody::from_points(&[
                Point::new(o, o),
                Point::new(l, o),
                Point::new(l, l),
                Point::new(o, l),
            ])
        }
        ShapeSpec::Parallelogram { angle } => {
            let w = Point::from_angle(*angle);
            let e = Point::new(T::one(), T::zero());
            if !(e.cross(w).abs() > T::of(1e-9)) {
                return Err(GeomError::BadSpec(format!("parallelogram angle {angle} is flat")));
            }
            ConvexBody::from_points(&[e + w, w - e, -e - w, e - w])
        }
        ShapeSpec::Hexagon { r } => {
            positive("r", *r)?;
            regular_polygon(6, *r)
        }
        ShapeSpec::Ellipse { a, b, n } => {
            positive("a", *a)?;
            positive("b", *b)?;
            smooth_count(*n)?;
            let pts: Vec<_> = (0..*n)
                .map(|k| {
                    let t = T::TAU() * T::of_usize(k) / T::of_usize(*n);
                    Point::new(*a * t.cos(), *b * t.sin())
                })
                .collect();
            ConvexBody::from_points(&pts)
        }
        ShapeSpec::Disk { n } => {
            smooth_count(*n)?;
            regular_polygon(*n, T::one())
        }
        ShapeSpec::Random { n, seed } => {
            random_points(*n, *seed).and_then(|pts| ConvexBody::from_points(&pts))
        }
        ShapeSpec::RandomSymmetric { n, seed } => random_points(*n, *seed).and_then(|pts| {
            let all: Vec<_> = pts.iter().flat_map(|&p| [p, -p]).collect();
            ConvexBody::from_points(&all)
        }),
        ShapeSpec::Polygon(pts) => ConvexBody::from_points(pts),
    }
}

fn regular_polygon<T: Scalar>(n: usize, r: T) -> Result<ConvexBody<T>> {
    let pts: Vec<_> = (0..n)
        .map(|k| Point::from_angle(T::TAU() * T::of_usize(k) / T::of_usize(n)) * r)
        .collect();
    ConvexBody::from_points(&pts)
}

fn positive<T: Scalar>(name: &str, v: T) -> Result<()> {
    if v > T::zero() && v.is_finite() {
        Ok(())
    } else {
        Err(GeomError::BadSpec(format!("{name} must be positive, got {v}")))
    }
}

fn smooth_count(n: usize) -> Result<()> {
    if n >= MIN_SMOOTH_VERTICES {
        Ok(())
    } else {
        Err(GeomError::BadSpec(format!(
            "smooth shapes need at least {MIN_SMOOTH_VERTICES} vertices, got {n}"
        )))
    }
}

fn random_points<T: Scalar>(n: usize, seed: u64) -> Result<Vec<Point<T>>> {
    if n < 3 {
        return Err(GeomError::BadSpec(format!("random shape needs n >= 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n)
        .map(|_| {
            let x: f64 = rng.gen_range(-1.0..=1.0);
            let y: f64 = rng.gen_range(-1.0..=1.0);
            Point::new(T::of(x), T::of(y))
        })
        .collect())
}
