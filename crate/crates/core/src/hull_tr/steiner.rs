use crate::body::{ConvexBody, Direction, Point};
use crate::scalar::Scalar;

/// Steiner symmetrization about the line through the origin spanned by
/// `axis`: every chord perpendicular to the axis is slid along itself until
/// its midpoint lies on the axis.
///
/// The chord length is piecewise linear between the axis coordinates of
/// the vertices, so symmetrizing the chords at those coordinates is exact.
pub fn steiner_symmetrize<T: Scalar>(b: &ConvexBody<T>, axis: &Direction<T>) -> ConvexBody<T> {
    let u = axis.vector();
    let n = axis.perp().vector();
    let mut levels: Vec<T> = b.vertices().iter().map(|p| p.dot(u)).collect();
    levels.sort_by(|a, b| a.partial_cmp(b).unwrap());
    levels.dedup_by(|a, b| (*a - *b).abs() <= T::geom_eps());
    let half = T::of(0.5);
    let mut pts = Vec::with_capacity(2 * levels.len());
    for &s in &levels {
        let (lo, hi) = chord(b, u, n, s);
        let r = (hi - lo) * half;
        pts.push(u * s + n * r);
        pts.push(u * s - n * r);
    }
    ConvexBody::from_points(&pts).expect("symmetrization of a body is a body")
}

/// Extent along `n` of the section `{p ∈ B : ⟨p, u⟩ = s}`.
fn chord<T: Scalar>(b: &ConvexBody<T>, u: Point<T>, n: Point<T>, s: T) -> (T, T) {
    let (mut lo, mut hi) = (T::infinity(), T::neg_infinity());
    let mut take = |t: T| {
        lo = lo.min(t);
        hi = hi.max(t);
    };
    let eps = T::geom_eps();
    for (p, q) in b.edges() {
        let (sp, sq) = (p.dot(u), q.dot(u));
        if (sp - s).abs() <= eps {
            take(p.dot(n));
        }
        if (sp - s) * (sq - s) < T::zero() {
            let t = (s - sp) / (sq - sp);
            take(p.lerp(q, t).dot(n));
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{make_shape, ShapeSpec};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn symmetric_input_is_unchanged() {
        let hex = make_shape(&ShapeSpec::Hexagon { r: 1.0 }).unwrap();
        let s = steiner_symmetrize(&hex, &Direction::new(0.0));
        assert!(s.hausdorff_distance(&hex) < 1e-12);
        let d = make_shape(&ShapeSpec::Square).unwrap().rotate(FRAC_PI_4);
        let s = steiner_symmetrize(&d, &Direction::new(0.0));
        assert!(s.hausdorff_distance(&d) < 1e-12);
    }

    #[test]
    fn right_triangle_about_the_y_axis() {
        let t = make_shape(&ShapeSpec::Polygon(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(0.0, 2.0),
        ]))
        .unwrap();
        let s = steiner_symmetrize(&t, &Direction::new(FRAC_PI_2));
        assert!((s.area() - 2.0).abs() < 1e-12);
        assert!(s.rotate(std::f64::consts::PI).hausdorff_distance(&s) > 0.1);
        let mirrored: Vec<_> = s.vertices().iter().map(|p| Point::new(-p.x, p.y)).collect();
        let m = ConvexBody::from_points(&mirrored).unwrap();
        assert!(m.hausdorff_distance(&s) < 1e-12);
    }

    #[test]
    fn area_is_preserved() {
        for seed in 0..10 {
            let k = make_shape::<f64>(&ShapeSpec::Random { n: 15, seed }).unwrap();
            let s = steiner_symmetrize(&k, &Direction::new(0.3 * seed as f64));
            assert!((s.area() - k.area()).abs() < 1e-9 * k.area());
        }
    }
}
