use crate::error::{GeomError, Result};
use crate::scalar::Scalar;

use super::{ConvexBody, Direction, Point};

impl<T: Scalar> ConvexBody<T> {
    /// `A ⊕ B` by merging the two edge sequences in angular order.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        let a = rotate_to_lowest(&self.vertices);
        let b = rotate_to_lowest(&other.vertices);
        let (n, m) = (a.len(), b.len());
        let mut out = Vec::with_capacity(n + m);
        let (mut i, mut j) = (0, 0);
        while i < n || j < m {
            out.push(a[i % n] + b[j % m]);
            let ea = a[(i + 1) % n] - a[i % n];
            let eb = b[(j + 1) % m] - b[j % m];
            let c = ea.cross(eb);
            let advance_a = i < n && (j == m || c >= T::zero());
            let advance_b = j < m && (i == n || c <= T::zero());
            if advance_a {
                i += 1;
            }
            if advance_b {
                j += 1;
            }
        }
        // Exactly convex up to roundoff; the hull pass only removes
        // collinear vertices produced by parallel edges.
        Self::from_points(&out).expect("Minkowski sum of bodies is a body")
    }

    /// `½(K ⊕ (−K))`, the unit disk of the relative norm of `K`.
    pub fn central_symmetral(&self) -> Self {
        self.minkowski_sum(&self.negate()).scale(T::of(0.5))
    }

    /// `K ⊕ (−K)`.
    pub fn difference_body(&self) -> Self {
        self.minkowski_sum(&self.negate())
    }

    /// Polar body `{y : ⟨x, y⟩ ≤ 1 ∀x ∈ B}`, with vertices `n_i / h_i` over
    /// the edges. The origin must be interior with margin `> 1e-9`; bodies
    /// are never re-centered here.
    pub fn polar(&self) -> Result<Self> {
        self.require_origin_interior()?;
        let verts: Vec<Point<T>> = self
            .edges()
            .map(|(a, b)| {
                let e = b - a;
                let normal = Point::new(e.y, -e.x);
                normal / normal.dot(a)
            })
            .collect();
        Self::from_points(&verts)
    }

    /// Symmetric Hausdorff distance `max_u |h_A(u) − h_B(u)|`.
    ///
    /// Between consecutive edge normals of either body both support points
    /// are fixed vertices `a`, `b`, so the difference is `⟨a − b, u⟩` on that
    /// arc and its maximum is at an arc end or at `u ∥ ±(a − b)`.
    pub fn hausdorff_distance(&self, other: &Self) -> T {
        let fa = NormalFan::new(self);
        let fb = NormalFan::new(other);
        let mut cuts: Vec<T> = fa.angles.iter().chain(&fb.angles).copied().collect();
        cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let tau = T::TAU();
        let mut best = T::zero();
        for k in 0..cuts.len() {
            let lo = cuts[k];
            let hi = if k + 1 < cuts.len() { cuts[k + 1] } else { cuts[0] + tau };
            let mid = (lo + hi) * T::of(0.5);
            let d = fa.support_vertex(mid) - fb.support_vertex(mid);
            let at = |t: T| d.dot(Point::from_angle(t)).abs();
            best = best.max(at(lo)).max(at(hi));
            for phi in [d.angle(), d.angle() + T::PI()] {
                let mut phi = phi;
                while phi < lo {
                    phi = phi + tau;
                }
                if phi <= hi {
                    best = best.max(d.norm());
                }
            }
        }
        best
    }

    /// Clips to the half-plane to the left of the directed line `a → b`.
    fn clip_left_of(poly: &[Point<T>], a: Point<T>, b: Point<T>) -> Vec<Point<T>> {
        let e = b - a;
        let side = |p: Point<T>| e.cross(p - a);
        let mut out = Vec::with_capacity(poly.len() + 1);
        for i in 0..poly.len() {
            let p = poly[i];
            let q = poly[(i + 1) % poly.len()];
            let (sp, sq) = (side(p), side(q));
            if sp >= T::zero() {
                out.push(p);
            }
            if (sp > T::zero() && sq < T::zero()) || (sp < T::zero() && sq > T::zero()) {
                out.push(p + (q - p) * (sp / (sp - sq)));
            }
        }
        out
    }
}

/// `A ∩ B` by Sutherland–Hodgman clipping.
pub fn intersect<T: Scalar>(a: &ConvexBody<T>, b: &ConvexBody<T>) -> Result<ConvexBody<T>> {
    let mut poly = a.vertices.clone();
    for (p, q) in b.edges() {
        if poly.is_empty() {
            break;
        }
        poly = ConvexBody::clip_left_of(&poly, p, q);
    }
    if poly.len() < 3 {
        return Err(GeomError::DegenerateBody("empty intersection".into()));
    }
    ConvexBody::from_points(&poly)
}

fn rotate_to_lowest<T: Scalar>(v: &[Point<T>]) -> Vec<Point<T>> {
    let mut k = 0;
    for (i, p) in v.iter().enumerate() {
        let q = v[k];
        if p.y < q.y || (p.y == q.y && p.x < q.x) {
            k = i;
        }
    }
    v[k..].iter().chain(v[..k].iter()).copied().collect()
}

/// Outward edge-normal angles of a polygon in `[0, 2π)`, sorted, each paired
/// with the vertex that supports the arc of directions just after it.
struct NormalFan<T> {
    angles: Vec<T>,
    next: Vec<Point<T>>,
}

impl<T: Scalar> NormalFan<T> {
    fn new(body: &ConvexBody<T>) -> Self {
        let v = body.vertices();
        let n = v.len();
        let mut pairs: Vec<(T, Point<T>)> = (0..n)
            .map(|i| {
                let e = v[(i + 1) % n] - v[i];
                let mut a = Point::new(e.y, -e.x).angle();
                if a < T::zero() {
                    a = a + T::TAU();
                }
                (a, v[(i + 1) % n])
            })
            .collect();
        pairs.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        Self {
            angles: pairs.iter().map(|p| p.0).collect(),
            next: pairs.iter().map(|p| p.1).collect(),
        }
    }

    /// Support vertex for the direction at `theta` (any real angle).
    fn support_vertex(&self, theta: T) -> Point<T> {
        let tau = T::TAU();
        let t = theta - (theta / tau).floor() * tau;
        let k = self.angles.partition_point(|&a| a <= t);
        if k == 0 {
            *self.next.last().unwrap()
        } else {
            self.next[k - 1]
        }
    }
}

/// `O(log n)` radial-function queries against a body with the origin in
/// its interior.
#[derive(Clone, Debug)]
pub struct GaugeIndex<T> {
    vertices: Vec<Point<T>>,
    angles: Vec<T>,
}

impl<T: Scalar> GaugeIndex<T> {
    pub fn new(body: &ConvexBody<T>) -> Result<Self> {
        body.require_origin_interior()?;
        let tau = T::TAU();
        let angle = |p: Point<T>| {
            let a = p.angle();
            if a < T::zero() {
                a + tau
            } else {
                a
            }
        };
        let v = body.vertices();
        let start = (0..v.len())
            .min_by(|&i, &j| angle(v[i]).partial_cmp(&angle(v[j])).unwrap())
            .unwrap_or(0);
        let vertices: Vec<Point<T>> = v[start..].iter().chain(v[..start].iter()).copied().collect();
        let angles = vertices.iter().map(|&p| angle(p)).collect();
        Ok(Self { vertices, angles })
    }

    /// `‖z‖` in the norm whose unit ball is the indexed body.
    pub fn gauge(&self, z: Point<T>) -> T {
        if z.x == T::zero() && z.y == T::zero() {
            return T::zero();
        }
        let mut theta = z.angle();
        if theta < T::zero() {
            theta = theta + T::TAU();
        }
        let n = self.vertices.len();
        // Edge (k-1, k) where angles[k-1] <= theta < angles[k], cyclically.
        let k = self.angles.partition_point(|&a| a <= theta);
        let (a, b) = if k == 0 || k == n {
            (self.vertices[n - 1], self.vertices[0])
        } else {
            (self.vertices[k - 1], self.vertices[k])
        };
        z.cross(b - a) / a.cross(b)
    }

    pub fn radial(&self, u: &Direction<T>) -> T {
        T::one() / self.gauge(u.vector())
    }
}

/// Arclength parametrization of a body's boundary, starting at vertex 0.
#[derive(Clone, Debug)]
pub struct BoundaryParam<T> {
    vertices: Vec<Point<T>>,
    cumulative: Vec<T>,
    perimeter: T,
}

impl<T: Scalar> BoundaryParam<T> {
    pub fn new(body: &ConvexBody<T>) -> Self {
        let vertices = body.vertices().to_vec();
        let n = vertices.len();
        let mut cumulative = Vec::with_capacity(n + 1);
        let mut acc = T::zero();
        cumulative.push(acc);
        for i in 0..n {
            acc = acc + vertices[i].distance(vertices[(i + 1) % n]);
            cumulative.push(acc);
        }
        Self {
            vertices,
            cumulative,
            perimeter: acc,
        }
    }

    #[inline]
    pub fn perimeter(&self) -> T {
        self.perimeter
    }

    /// Parameter of vertex `i`.
    #[inline]
    pub fn vertex_param(&self, i: usize) -> T {
        self.cumulative[i]
    }

    /// Boundary point at arclength `s` (taken modulo the perimeter).
    pub fn point_at(&self, s: T) -> Point<T> {
        let l = self.perimeter;
        let mut s = s % l;
        if s < T::zero() {
            s = s + l;
        }
        let n = self.vertices.len();
        let i = self.cumulative.partition_point(|&c| c <= s).saturating_sub(1).min(n - 1);
        let seg = self.cumulative[i + 1] - self.cumulative[i];
        let t = if seg > T::zero() {
            (s - self.cumulative[i]) / seg
        } else {
            T::zero()
        };
        self.vertices[i].lerp(self.vertices[(i + 1) % n], t)
    }

    /// Parameter of the boundary point nearest to `p`.
    pub fn project(&self, p: Point<T>) -> T {
        let n = self.vertices.len();
        let mut best = (T::infinity(), T::zero());
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let ab = b - a;
            let t = ((p - a).dot(ab) / ab.norm_sq()).max(T::zero()).min(T::one());
            let d = p.distance(a + ab * t);
            if d < best.0 {
                best = (d, self.cumulative[i] + t * (self.cumulative[i + 1] - self.cumulative[i]));
            }
        }
        best.1
    }

    /// Vertices (with their parameters) lying in `(lo, hi)`, with `hi` possibly
    /// past one perimeter.
    pub fn vertices_between(&self, lo: T, hi: T) -> Vec<(T, Point<T>)> {
        let l = self.perimeter;
        let mut out = Vec::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            for wrap in 0..3 {
                let s = self.cumulative[i] + l * T::of_usize(wrap);
                if s > lo && s < hi {
                    out.push((s, v));
                }
            }
        }
        out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use crate::body::{make_shape, ShapeSpec};

    fn body(v: &[(f64, f64)]) -> ConvexBody<f64> {
        let pts: Vec<_> = v.iter().map(|&(x, y)| Point::new(x, y)).collect();
        ConvexBody::from_points(&pts).unwrap()
    }

    fn square() -> ConvexBody<f64> {
        body(&[(-1., -1.), (1., -1.), (1., 1.), (-1., 1.)])
    }

    fn triangle() -> ConvexBody<f64> {
        let s = 3f64.sqrt() / 2.0;
        body(&[(1.0, 0.0), (-0.5, s), (-0.5, -s)])
    }

    #[test]
    fn minkowski_of_squares() {
        let s = square().minkowski_sum(&square());
        assert_eq!(s.area(), 16.0);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn triangle_minus_triangle_is_hexagon() {
        let t = triangle();
        let d = t.minkowski_sum(&t.negate());
        assert_eq!(d.len(), 6);
        for v in d.vertices() {
            assert!((v.norm() - 3f64.sqrt()).abs() < 1e-14);
        }
    }

    #[test]
    fn minkowski_with_a_translate_degenerate_summand() {
        // B ⊕ (p + εB) approaches the translate; the edge merge is the
        // same code path as the general case.
        let sq = square();
        let tiny = square().scale(1e-4).translate(Point::new(3.0, -2.0));
        let s = sq.minkowski_sum(&tiny);
        let expected = sq.scale(1.0 + 1e-4).translate(Point::new(3.0, -2.0));
        assert!(s.hausdorff_distance(&expected) < 1e-12);
    }

    #[test]
    fn symmetral_of_triangle() {
        let m = triangle().central_symmetral();
        assert!((m.area() - 9.0 * 3f64.sqrt() / 8.0).abs() < 1e-14);
        assert!((m.area() - 1.5 * triangle().area()).abs() < 1e-14);
        assert!(m.asymmetry() <= 1e-12);
    }

    #[test]
    fn polar_of_square_and_hexagon() {
        let p = square().polar().unwrap();
        assert!((p.area() - 2.0).abs() < 1e-15);
        let hex: Vec<_> = (0..6).map(|k| Point::from_angle(k as f64 * PI / 3.0)).collect();
        let h = ConvexBody::from_points(&hex).unwrap();
        let hp = h.polar().unwrap();
        assert!((hp.area() - 2.0 * 3f64.sqrt()).abs() < 1e-13);
        for v in hp.vertices() {
            let a = v.angle().rem_euclid(PI / 3.0);
            assert!((a - PI / 6.0).abs() < 1e-12);
        }
        assert!(matches!(
            square().translate(Point::new(1.0, 0.0)).polar(),
            Err(GeomError::OriginNotInterior { .. })
        ));
    }

    #[test]
    fn hausdorff_agrees_with_vertex_distances() {
        // Distance to a convex set is convex, so each one-sided maximum is
        // attained at a vertex.
        let oracle = |a: &ConvexBody<f64>, b: &ConvexBody<f64>| {
            let one = |f: &ConvexBody<f64>, t: &ConvexBody<f64>| {
                f.vertices().iter().map(|&p| t.distance_to(p)).fold(0.0, f64::max)
            };
            one(a, b).max(one(b, a))
        };
        for seed in 0..40u64 {
            let a = make_shape::<f64>(&ShapeSpec::Random { n: 3 + seed as usize % 17, seed }).unwrap();
            let b = make_shape::<f64>(&ShapeSpec::Random { n: 5 + seed as usize % 7, seed: seed + 100 })
                .unwrap()
                .scale(0.3 + 0.05 * seed as f64)
                .translate(Point::new(0.02 * seed as f64, -0.1));
            let (h, o) = (a.hausdorff_distance(&b), oracle(&a, &b));
            assert!((h - o).abs() < 1e-12, "seed {seed}: {h} vs {o}");
        }
    }

    #[test]
    fn hausdorff_examples() {
        let sq = square();
        assert_eq!(sq.hausdorff_distance(&sq), 0.0);
        let big = sq.scale(2.0);
        assert!((sq.hausdorff_distance(&big) - 2f64.sqrt()).abs() < 1e-15);
        let moved = sq.translate(Point::new(5.0, 0.0));
        assert!((sq.hausdorff_distance(&moved) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn intersection_of_overlapping_squares() {
        let a = square();
        let b = square().translate(Point::new(1.0, 1.0));
        let i = intersect(&a, &b).unwrap();
        assert!((i.area() - 1.0).abs() < 1e-15);
        let far = square().translate(Point::new(5.0, 0.0));
        assert!(intersect(&a, &far).is_err());
    }

    #[test]
    fn gauge_index_matches_scan() {
        let t = body(&[(1.0, 0.0), (0.0, 1.0), (-1.0, -1.0), (0.5, -0.8)]);
        let idx = GaugeIndex::new(&t).unwrap();
        for k in 0..360 {
            let z = Point::from_angle(k as f64 * PI / 180.0) * 0.7;
            let g1 = idx.gauge(z);
            let g2 = t.gauge(z).unwrap();
            assert!((g1 - g2).abs() < 1e-13, "{k}: {g1} vs {g2}");
        }
    }

    #[test]
    fn boundary_param_walks_the_square() {
        let sq = square();
        let bp = BoundaryParam::new(&sq);
        assert_eq!(bp.perimeter(), 8.0);
        let p = bp.point_at(1.0);
        assert_eq!(p, Point::new(0.0, -1.0));
        assert_eq!(bp.point_at(9.0), p);
        assert!((bp.project(Point::new(0.0, -1.5)) - 1.0).abs() < 1e-15);
    }
}
