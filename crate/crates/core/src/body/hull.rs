use std::cmp::Ordering;

use crate::scalar::Scalar;

use super::Point;

/// Andrew's monotone chain. Returns the strictly convex hull,
/// counterclockwise, starting at the lexicographically smallest point.
///
/// A turn `o → a → b` counts as collinear when the sine of its angle is at
/// most `1e-12`; measuring the angle rather than the raw cross product keeps
/// genuine corners next to nearly coincident points. Vertices closer than
/// `1e-12` times the coordinate scale are then merged.
pub fn convex_hull<T: Scalar>(points: &[Point<T>]) -> Vec<Point<T>> {
    let mut pts: Vec<Point<T>> = points.to_vec();
    pts.sort_by(|a, b| {
        a.x.partial_cmp(&b.x)
            .unwrap_or(Ordering::Equal)
            .then(a.y.partial_cmp(&b.y).unwrap_or(Ordering::Equal))
    });
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let eps = T::geom_eps();
    let turn = |o: Point<T>, a: Point<T>, b: Point<T>| {
        let (u, v) = (a - o, b - o);
        u.cross(v) - eps * u.norm() * v.norm()
    };

    let mut hull: Vec<Point<T>> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= T::zero() {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= T::zero() {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    // The chain never tests its two end points against the wrap-around
    // neighbours, so sweep the cycle once more for near-duplicate and
    // collinear vertices.
    let scale = pts
        .iter()
        .fold(T::one(), |m, p| m.max(p.x.abs()).max(p.y.abs()));
    let near = eps * scale;
    let mut changed = true;
    while changed && hull.len() > 3 {
        changed = false;
        let mut i = 0;
        while hull.len() > 3 && i < hull.len() {
            let n = hull.len();
            let (prev, cur, next) = (hull[(i + n - 1) % n], hull[i], hull[(i + 1) % n]);
            if prev.distance(cur) <= near || turn(prev, cur, next) <= T::zero() {
                hull.remove(i);
                changed = true;
            } else {
                i += 1;
            }
        }
    }
    let first = (0..hull.len())
        .min_by(|&a, &b| {
            let (p, q) = (hull[a], hull[b]);
            p.x.partial_cmp(&q.x)
                .unwrap_or(Ordering::Equal)
                .then(p.y.partial_cmp(&q.y).unwrap_or(Ordering::Equal))
        })
        .unwrap_or(0);
    hull.rotate_left(first);
    hull
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_with_edge_midpoints() {
        let pts: Vec<Point<f64>> = [
            (0., 0.),
            (1., 0.),
            (2., 0.),
            (2., 1.),
            (2., 2.),
            (1., 2.),
            (0., 2.),
            (0., 1.),
            (1., 1.),
            (0., 0.),
        ]
        .iter()
        .map(|&(x, y)| Point::new(x, y))
        .collect();
        let h = convex_hull(&pts);
        assert_eq!(
            h,
            vec![
                Point::new(0., 0.),
                Point::new(2., 0.),
                Point::new(2., 2.),
                Point::new(0., 2.)
            ]
        );
    }

    #[test]
    fn end_point_in_the_middle_of_an_edge_is_dropped() {
        // The leftmost point by a rounding error sits on the left edge.
        let pts: Vec<Point<f64>> = [
            (-1.0 - 3e-16, 0.0),
            (-1.0, -1.0),
            (1.0, -1.0),
            (1.0, 1.0),
            (-1.0 - 3e-16, 1.0),
        ]
        .iter()
        .map(|&(x, y)| Point::new(x, y))
        .collect();
        let h = convex_hull(&pts);
        assert_eq!(h.len(), 4, "{h:?}");
        assert_eq!(h[0], Point::new(-1.0 - 3e-16, 1.0));
    }

    #[test]
    fn collinear_input_collapses() {
        let pts: Vec<Point<f64>> = (0..5).map(|i| Point::new(i as f64, 2.0 * i as f64)).collect();
        assert_eq!(convex_hull(&pts).len(), 2);
    }
}
