//! Extremal figures of a convex body: longest chords, widths, the largest
//! inscribed parallelogram `P`, the smallest circumscribed parallelogram
//! `P'`, and the largest inscribed affine-regular hexagon `H`.
//!
//! The parallelogram searches are exact finite enumerations for polygons.
//! For `P`, the area `2|p × q|` is bilinear along each pair of edges, so the
//! maximum sits at a vertex pair. For `P'`, with one side direction fixed,
//! the area is a convex piecewise-linear function of the cotangent of the
//! angle between the sides, so the other side is flush with an edge too.

use rayon::prelude::*;

use crate::body::{BoundaryParam, ConvexBody, Direction, GaugeIndex, Point};
use crate::error::{GeomError, Result};
use crate::optimize::{golden_section_max, scan_then_refine_max};
use crate::scalar::Scalar;

/// Coarse direction samples for chord–width products over `[0, π)`.
pub const DIRECTION_SAMPLES: usize = 4096;
/// Coarse boundary samples for the hexagon search over half the boundary.
pub const HEXAGON_SAMPLES: usize = 2048;
/// Angular tolerance of the golden-section polish.
pub const ANGLE_TOL: f64 = 1e-10;

/// Parameters that realize an extremal figure.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness<T> {
    /// Parallelogram `conv{±p, ±q}` with `p, q ∈ bd M`, `p × q > 0`.
    Inscribed { p: Point<T>, q: Point<T> },
    /// Parallelogram bounded by the strips `|⟨x, u⟩| ≤ h(u)`, `|⟨x, v⟩| ≤ h(v)`.
    Circumscribed { u: Direction<T>, v: Direction<T> },
    /// Hexagon with vertex cycle `x, y, y − x, −x, −y, x − y`.
    Hexagon { x: Point<T>, y: Point<T> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalFigure<T> {
    pub figure: ConvexBody<T>,
    pub area: T,
    pub witness: Witness<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChordResult<T> {
    pub direction: Direction<T>,
    pub length: T,
    pub endpoints: (Point<T>, Point<T>),
}

/// Maximum of `d_K(u) · w_K(u^⊥)` and where it is attained.
#[derive(Clone, Debug, PartialEq)]
pub struct ChordWidthMax<T> {
    pub value: T,
    pub direction: Direction<T>,
    pub chord: T,
    pub width: T,
}

/// Width `h(u) + h(−u)`.
pub fn width<T: Scalar>(body: &ConvexBody<T>, u: &Direction<T>) -> T {
    body.width(u.vector())
}

/// Longest chord of `K` parallel to `u`.
///
/// The length is `2ρ_M(u)` with `M` the central symmetral. The endpoints
/// come from maximizing the (concave) chord-length profile across the
/// offsets perpendicular to `u`.
pub fn longest_chord<T: Scalar>(body: &ConvexBody<T>, u: &Direction<T>) -> ChordResult<T> {
    let sym = body.central_symmetral();
    let length = T::of(2.0) / sym.gauge_unchecked(u.vector());
    let normal = u.perp().vector();
    let lo = -body.support(-normal);
    let hi = body.support(normal);
    let tol = T::geom_eps() * T::one().max(hi - lo);
    let (t, _) = golden_section_max(
        |t| chord_at(body, u, t).map_or(T::neg_infinity(), |(a, b)| b - a),
        lo,
        hi,
        tol,
    );
    let (s0, s1) = chord_at(body, u, t).unwrap_or((T::zero(), T::zero()));
    let base = normal * t;
    ChordResult {
        direction: *u,
        length,
        endpoints: (base + u.vector() * s0, base + u.vector() * s1),
    }
}

/// The parameter interval `{s : t·u^⊥ + s·u ∈ K}`.
fn chord_at<T: Scalar>(body: &ConvexBody<T>, u: &Direction<T>, t: T) -> Option<(T, T)> {
    let dir = u.vector();
    let base = u.perp().vector() * t;
    let (mut s_min, mut s_max) = (T::neg_infinity(), T::infinity());
    for (a, b) in body.edges() {
        let e = b - a;
        let n = Point::new(e.y, -e.x);
        let slack = n.dot(a) - n.dot(base);
        let rate = n.dot(dir);
        if rate > T::zero() {
            s_max = s_max.min(slack / rate);
        } else if rate < T::zero() {
            s_min = s_min.max(slack / rate);
        } else if slack < T::zero() {
            return None;
        }
    }
    (s_min <= s_max).then_some((s_min, s_max))
}

/// `max_u d_K(u) · w_K(u^⊥)` by a coarse scan of 4096 angles in `[0, π)`
/// plus the kink directions, polished by golden section to `1e-10` rad.
pub fn max_chord_width_product<T: Scalar>(body: &ConvexBody<T>) -> ChordWidthMax<T> {
    let sym = body.central_symmetral();
    let gauge = GaugeIndex::new(&sym).expect("central symmetral contains the origin");
    let profile = |theta: T| {
        let u = Point::from_angle(theta);
        let chord = T::of(2.0) / gauge.gauge(u);
        chord * sym.width(u.perp())
    };
    // The profile kinks where `u` points at a vertex of the symmetral or
    // runs parallel to one of its edges.
    let kinks: Vec<T> = sym
        .vertices()
        .iter()
        .copied()
        .chain(sym.edges().map(|(a, b)| b - a))
        .map(|p| {
            let a = p.angle();
            if a < T::zero() {
                a + T::PI()
            } else {
                a
            }
        })
        .collect();
    let (theta, value) = scan_then_refine_max(
        profile,
        T::zero(),
        T::PI(),
        DIRECTION_SAMPLES,
        &kinks,
        T::of(ANGLE_TOL),
    );
    let direction = Direction::new(theta);
    let chord = T::of(2.0) / gauge.gauge(direction.vector());
    ChordWidthMax {
        value,
        direction,
        chord,
        width: sym.width(direction.perp().vector()),
    }
}

/// Largest-area parallelogram `conv{±p, ±q}` inscribed in an o-symmetric
/// body, by exact vertex-pair enumeration.
pub fn largest_inscribed_parallelogram<T: Scalar>(m: &ConvexBody<T>) -> Result<ExtremalFigure<T>> {
    m.require_symmetric()?;
    let v = m.vertices();
    let n = v.len();
    let per_row: Vec<(T, usize, usize)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut best = (T::neg_infinity(), i, i);
            for j in (i + 1)..n {
                let c = v[i].cross(v[j]).abs();
                if c > best.0 {
                    best = (c, i, j);
                }
            }
            best
        })
        .collect();
    let mut best = per_row[0];
    for &row in &per_row[1..] {
        if row.0 > best.0 {
            best = row;
        }
    }
    let (p, mut q) = (v[best.1], v[best.2]);
    if p.cross(q) < T::zero() {
        q = -q;
    }
    let figure = ConvexBody::from_points(&[p, q, -p, -q])?;
    Ok(ExtremalFigure {
        figure,
        area: T::of(2.0) * p.cross(q),
        witness: Witness::Inscribed { p, q },
    })
}

/// Smallest-area parallelogram circumscribed about an o-symmetric body, by
/// enumeration of edge-normal pairs. Ties go to the lexicographically
/// smallest pair of side angles in `[0, π)`.
pub fn smallest_circumscribed_parallelogram<T: Scalar>(
    m: &ConvexBody<T>,
) -> Result<ExtremalFigure<T>> {
    m.require_symmetric()?;
    // (angle in [0, π), unit normal, support value)
    let mut sides: Vec<(T, Point<T>, T)> = m
        .edges()
        .map(|(a, b)| {
            let e = b - a;
            let mut n = Point::new(e.y, -e.x) / e.norm();
            let mut ang = n.angle();
            if ang < T::zero() {
                ang = ang + T::PI();
                n = -n;
            }
            if ang >= T::PI() {
                ang = ang - T::PI();
                n = -n;
            }
            (ang, n, m.support(n))
        })
        .collect();
    sides.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    sides.dedup_by(|a, b| (a.0 - b.0).abs() <= T::geom_eps());
    let k = sides.len();
    let rel = T::of(1e-12);
    let per_row: Vec<Option<(T, usize, usize)>> = (0..k)
        .into_par_iter()
        .map(|i| {
            let mut best: Option<(T, usize, usize)> = None;
            for j in (i + 1)..k {
                let s = sides[i].1.cross(sides[j].1).abs();
                if s <= T::geom_eps() {
                    continue;
                }
                let area = T::of(4.0) * sides[i].2 * sides[j].2 / s;
                if best.is_none_or(|b| area < b.0 * (T::one() - rel)) {
                    best = Some((area, i, j));
                }
            }
            best
        })
        .collect();
    let mut best: Option<(T, usize, usize)> = None;
    for row in per_row.into_iter().flatten() {
        if best.is_none_or(|b| row.0 < b.0 * (T::one() - rel)) {
            best = Some(row);
        }
    }
    let (area, i, j) = best.ok_or_else(|| GeomError::NoSolution("no two independent edge directions".into()))?;
    let (u, hu) = (sides[i].1, sides[i].2);
    let (v, hv) = (sides[j].1, sides[j].2);
    let det = u.cross(v);
    let corner = |a: T, b: T| Point::new((a * v.y - b * u.y) / det, (b * u.x - a * v.x) / det);
    let figure = ConvexBody::from_points(&[
        corner(hu, hv),
        corner(-hu, hv),
        corner(-hu, -hv),
        corner(hu, -hv),
    ])?;
    Ok(ExtremalFigure {
        figure,
        area,
        witness: Witness::Circumscribed {
            u: Direction::new(sides[i].0),
            v: Direction::new(sides[j].0),
        },
    })
}

/// Solver for the affine-regular hexagon through a boundary point.
pub(crate) struct HexagonSolver<T> {
    gauge: GaugeIndex<T>,
    boundary: BoundaryParam<T>,
}

impl<T: Scalar> HexagonSolver<T> {
    pub(crate) fn new(m: &ConvexBody<T>) -> Result<Self> {
        m.require_symmetric()?;
        Ok(Self {
            gauge: GaugeIndex::new(m)?,
            boundary: BoundaryParam::new(m),
        })
    }

    pub(crate) fn boundary(&self) -> &BoundaryParam<T> {
        &self.boundary
    }

    pub(crate) fn gauge(&self, z: Point<T>) -> T {
        self.gauge.gauge(z)
    }

    /// For the boundary point at parameter `s`, the vertex `y` following
    /// `x` counterclockwise with `‖y‖ = ‖y − x‖ = 1`. When several `y`
    /// qualify, the one maximizing `x × y` wins.
    pub(crate) fn solve(&self, s: T) -> (Point<T>, Point<T>) {
        let bp = &self.boundary;
        let x = bp.point_at(s);
        let half = bp.perimeter() / T::of(2.0);
        let excess = |t: T| self.gauge.gauge(bp.point_at(t) - x) - T::one();
        let eps = T::geom_eps();
        let tol = T::geom_eps() * bp.perimeter();
        // Monotone along the half-boundary from x (excess −1) to −x (+1).
        let bisect = |below: &dyn Fn(T) -> bool| {
            let (mut lo, mut hi) = (s, s + half);
            for _ in 0..200 {
                if hi - lo <= tol {
                    break;
                }
                let mid = (lo + hi) / T::of(2.0);
                if below(excess(mid)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            (lo + hi) / T::of(2.0)
        };
        let first = bisect(&|g| g < -eps);
        let last = bisect(&|g| g <= eps);
        let mut best = bp.point_at(first);
        let mut consider = |y: Point<T>| {
            if x.cross(y) > x.cross(best) {
                best = y;
            }
        };
        consider(bp.point_at(last));
        if last > first {
            for (_, v) in bp.vertices_between(first, last) {
                consider(v);
            }
        }
        (x, best)
    }
}

fn hexagon_figure<T: Scalar>(x: Point<T>, y: Point<T>) -> Result<ExtremalFigure<T>> {
    let figure = ConvexBody::from_points(&[x, y, y - x, -x, -y, x - y])?;
    Ok(ExtremalFigure {
        figure,
        area: T::of(3.0) * x.cross(y).abs(),
        witness: Witness::Hexagon { x, y },
    })
}

/// Affine-regular hexagon inscribed in `M` with `x` as a vertex.
pub fn inscribed_affreg_hexagon<T: Scalar>(m: &ConvexBody<T>, x: Point<T>) -> Result<ExtremalFigure<T>> {
    let solver = HexagonSolver::new(m)?;
    let g = solver.gauge(x);
    if (g - T::one()).abs() > T::contain_eps() {
        return Err(GeomError::NotOnBoundary {
            gauge: g.to_f64_lossy(),
        });
    }
    let s = solver.boundary().project(x);
    let (_, y) = solver.solve(s);
    if !((solver.gauge(y - x) - T::one()).abs() <= T::of(1e-8)) {
        return Err(GeomError::NoSolution(format!("no unit chord from ({}, {})", x.x, x.y)));
    }
    hexagon_figure(x, y)
}

/// Largest-area affine-regular hexagon inscribed in an o-symmetric body:
/// 2048 boundary samples over half the boundary, plus the polygon
/// vertices there, polished by golden section to `1e-10`.
pub fn largest_inscribed_affreg_hexagon<T: Scalar>(m: &ConvexBody<T>) -> Result<ExtremalFigure<T>> {
    let solver = HexagonSolver::new(m)?;
    let half = solver.boundary().perimeter() / T::of(2.0);
    let vertex_params: Vec<T> = (0..m.len())
        .map(|i| solver.boundary().vertex_param(i))
        .filter(|&s| s < half)
        .collect();
    let area = |s: T| {
        let (x, y) = solver.solve(s);
        T::of(3.0) * x.cross(y)
    };
    let (s, _) = scan_then_refine_max(
        area,
        T::zero(),
        half,
        HEXAGON_SAMPLES,
        &vertex_params,
        T::of(ANGLE_TOL),
    );
    let (x, y) = solver.solve(s);
    hexagon_figure(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{make_shape, ShapeSpec};
    use std::f64::consts::{FRAC_PI_4, PI};

    fn square() -> ConvexBody<f64> {
        make_shape(&ShapeSpec::Square).unwrap()
    }
    fn hexagon() -> ConvexBody<f64> {
        make_shape(&ShapeSpec::Hexagon { r: 1.0 }).unwrap()
    }
    fn triangle() -> ConvexBody<f64> {
        make_shape(&ShapeSpec::Triangle).unwrap()
    }
    fn disk() -> ConvexBody<f64> {
        make_shape(&ShapeSpec::Disk { n: 4096 }).unwrap()
    }

    const R3: f64 = 1.7320508075688772;

    #[test]
    fn chords_of_square_and_triangle() {
        let c = longest_chord(&square(), &Direction::new(0.0));
        assert!((c.length - 2.0).abs() < 1e-14);
        let c = longest_chord(&square(), &Direction::new(FRAC_PI_4));
        assert!((c.length - 2.0 * 2f64.sqrt()).abs() < 1e-14);
        let d = c.endpoints.1 - c.endpoints.0;
        assert!((d.norm() - c.length).abs() < 1e-9);
        let c = longest_chord(&triangle(), &Direction::new(PI / 2.0));
        assert!((c.length - R3).abs() < 1e-14);
    }

    #[test]
    fn chord_endpoints_lie_on_the_boundary() {
        let k = make_shape::<f64>(&ShapeSpec::Random { n: 15, seed: 3 }).unwrap();
        for i in 0..32 {
            let u = Direction::new(i as f64 * PI / 32.0);
            let c = longest_chord(&k, &u);
            for p in [c.endpoints.0, c.endpoints.1] {
                assert!(k.interior_margin_of(p).abs() < 1e-9);
            }
            let d = c.endpoints.1 - c.endpoints.0;
            assert!(d.cross(u.vector()).abs() < 1e-12 * d.norm().max(1.0));
            assert!((d.norm() - c.length).abs() < 1e-8);
        }
    }

    #[test]
    fn widths() {
        assert_eq!(width(&square(), &Direction::new(0.0)), 2.0);
        assert!((width(&triangle(), &Direction::new(0.0)) - 1.5).abs() < 1e-15);
        let w = width(&disk(), &Direction::new(0.37));
        assert!((w - 2.0).abs() < 1e-5);
    }

    #[test]
    fn chord_width_maxima() {
        let r = max_chord_width_product(&square());
        assert!((r.value - 8.0).abs() < 1e-9);
        let a = r.direction.angle();
        assert!((a - FRAC_PI_4).abs() < 1e-8 || (a - 3.0 * FRAC_PI_4).abs() < 1e-8);
        let r = max_chord_width_product(&disk());
        assert!((r.value - 4.0).abs() < 1e-4);
        let r = max_chord_width_product(&triangle());
        assert!((r.value - 3.0 * R3 / 2.0).abs() < 1e-9);
    }

    #[test]
    fn inscribed_parallelograms() {
        assert_eq!(largest_inscribed_parallelogram(&square()).unwrap().area, 4.0);
        let p = largest_inscribed_parallelogram(&hexagon()).unwrap();
        assert!((p.area - R3).abs() < 1e-14);
        assert!((p.area - p.figure.area()).abs() < 1e-12);
        let p = largest_inscribed_parallelogram(&disk()).unwrap();
        assert!((p.area - 2.0).abs() < 1e-5);
        assert!(matches!(
            largest_inscribed_parallelogram(&triangle()),
            Err(GeomError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn circumscribed_parallelograms() {
        let p = smallest_circumscribed_parallelogram(&square()).unwrap();
        assert!((p.area - 4.0).abs() < 1e-14);
        let p = smallest_circumscribed_parallelogram(&hexagon()).unwrap();
        assert!((p.area - 2.0 * R3).abs() < 1e-13);
        assert!((p.area - p.figure.area()).abs() < 1e-12);
        for v in hexagon().vertices() {
            assert!(p.figure.contains(*v, 1e-9));
        }
        let p = smallest_circumscribed_parallelogram(&disk()).unwrap();
        assert!((p.area - 4.0).abs() < 1e-4);
    }

    #[test]
    fn hexagon_through_a_vertex_of_the_hexagon() {
        let h = inscribed_affreg_hexagon(&hexagon(), Point::new(1.0, 0.0)).unwrap();
        let Witness::Hexagon { y, .. } = h.witness else { panic!() };
        assert!((y - Point::new(0.5, R3 / 2.0)).norm() < 1e-10);
        assert!((h.area - 1.5 * R3).abs() < 1e-10);
    }

    #[test]
    fn hexagon_in_the_disk_is_regular() {
        let h = inscribed_affreg_hexagon(&disk(), Point::new(1.0, 0.0)).unwrap();
        let Witness::Hexagon { y, .. } = h.witness else { panic!() };
        assert!((y - Point::new(0.5, R3 / 2.0)).norm() < 1e-5);
        assert!((h.area - 1.5 * R3).abs() < 1e-5);
        let disk = disk();
        for v in h.figure.vertices() {
            assert!(disk.interior_margin_of(*v).abs() < 1e-8);
        }
    }

    #[test]
    fn hexagon_rejects_off_boundary_points() {
        assert!(matches!(
            inscribed_affreg_hexagon(&square(), Point::new(0.5, 0.0)),
            Err(GeomError::NotOnBoundary { .. })
        ));
    }

    #[test]
    fn largest_hexagons() {
        let h = largest_inscribed_affreg_hexagon(&hexagon()).unwrap();
        assert!((h.area - 1.5 * R3).abs() < 1e-9);
        let h = largest_inscribed_affreg_hexagon(&square()).unwrap();
        assert!((h.area - 3.0).abs() < 1e-9);
        let h = largest_inscribed_affreg_hexagon(&disk()).unwrap();
        assert!((h.area - 1.5 * R3).abs() < 1e-4);
    }
}
