use crate::body::{intersect, BoundaryParam, ConvexBody, Point};
use crate::error::Result;
use crate::extremal::{
    inscribed_affreg_hexagon, largest_inscribed_affreg_hexagon, ExtremalFigure, Witness,
};
use crate::scalar::Scalar;

/// A Reuleaux triangle of the norm with unit disk `M`, scaled to constant
/// width two so that its central symmetral is `M` itself.
///
/// With `‖x‖ = ‖y‖ = ‖y − x‖ = 1` the body is `2·(M ∩ (x + M) ∩ (y + M))`.
/// Its corners are `o`, `2x` and `2y`; the side opposite each corner is an
/// arc of a translate of `2·bd M`.
#[derive(Clone, Debug)]
pub struct ReuleauxTriangle<T> {
    /// `(o, x, y)`, the unscaled triangle.
    pub vertices: [Point<T>; 3],
    pub body: ConvexBody<T>,
    pub hexagon: ExtremalFigure<T>,
    /// Boundary chains `o → 2x`, `2x → 2y`, `2y → o`.
    pub arcs: [Vec<Point<T>>; 3],
}

/// The Reuleaux triangle with corner directions `x` and the `y` of the
/// affine-regular hexagon through `x`.
pub fn reuleaux_triangle<T: Scalar>(m: &ConvexBody<T>, x: Point<T>) -> Result<ReuleauxTriangle<T>> {
    let hexagon = inscribed_affreg_hexagon(m, x)?;
    build(m, hexagon)
}

/// The Reuleaux triangle over the largest inscribed affine-regular hexagon.
pub fn reuleaux_minimal<T: Scalar>(m: &ConvexBody<T>) -> Result<ReuleauxTriangle<T>> {
    build(m, largest_inscribed_affreg_hexagon(m)?)
}

fn build<T: Scalar>(m: &ConvexBody<T>, hexagon: ExtremalFigure<T>) -> Result<ReuleauxTriangle<T>> {
    let Witness::Hexagon { x, y } = hexagon.witness else {
        unreachable!("hexagon figures carry hexagon witnesses")
    };
    let core = intersect(&intersect(m, &m.translate(x))?, &m.translate(y))?;
    let two = T::of(2.0);
    let body = core.scale(two);
    let corners = [Point::origin(), x * two, y * two];
    let param = BoundaryParam::new(&body);
    let s = corners.map(|c| param.project(c));
    let chain = |a: usize, b: usize| {
        let (lo, mut hi) = (s[a], s[b]);
        if hi <= lo {
            hi = hi + param.perimeter();
        }
        let mut pts = vec![corners[a]];
        let near = |p: Point<T>| p.distance(corners[a]).min(p.distance(corners[b])) <= T::contain_eps();
        pts.extend(param.vertices_between(lo, hi).into_iter().map(|(_, p)| p).filter(|&p| !near(p)));
        pts.push(corners[b]);
        pts
    };
    let arcs = [chain(0, 1), chain(1, 2), chain(2, 0)];
    Ok(ReuleauxTriangle {
        vertices: [Point::origin(), x, y],
        body,
        hexagon,
        arcs,
    })
}

/// Least area of a Reuleaux triangle of constant width two in the norm:
/// `2λ(M) − (4/3)λ(H)` with `H` the largest inscribed affine-regular hexagon.
pub fn reuleaux_min_area<T: Scalar>(m: &ConvexBody<T>) -> Result<T> {
    let h = largest_inscribed_affreg_hexagon(m)?;
    Ok(T::of(2.0) * m.area() - T::of(4.0) / T::of(3.0) * h.area)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{make_shape, ShapeSpec};
    use std::f64::consts::PI;

    const R3: f64 = 1.7320508075688772;

    fn shape(spec: ShapeSpec<f64>) -> ConvexBody<f64> {
        make_shape(&spec).unwrap()
    }

    #[test]
    fn classical_reuleaux_triangle() {
        let disk = shape(ShapeSpec::Disk { n: 4096 });
        let t = reuleaux_triangle(&disk, Point::new(1.0, 0.0)).unwrap();
        assert!((t.body.area() - 2.0 * (PI - R3)).abs() < 1e-4);
        assert!(t.body.central_symmetral().hausdorff_distance(&disk) < 2e-3 * 2.0);
        assert_eq!(t.arcs[0][0], Point::origin());
        assert!((*t.arcs[0].last().unwrap() - Point::new(2.0, 0.0)).norm() < 1e-9);
        // The arc o → 2x bulges away from 2y.
        let mid = t.arcs[0][t.arcs[0].len() / 2];
        assert!(mid.y < -0.2);
    }

    #[test]
    fn hexagon_norm_gives_a_triangle() {
        let hex = shape(ShapeSpec::Hexagon { r: 1.0 });
        let t = reuleaux_triangle(&hex, Point::new(1.0, 0.0)).unwrap();
        assert_eq!(t.body.len(), 3);
        assert!((t.body.area() - R3).abs() < 1e-9);
        for arc in &t.arcs {
            assert_eq!(arc.len(), 2);
        }
    }

    #[test]
    fn minimal_areas() {
        let disk = shape(ShapeSpec::Disk { n: 4096 });
        assert!((reuleaux_min_area(&disk).unwrap() - 2.0 * (PI - R3)).abs() < 1e-4);
        let hex = shape(ShapeSpec::Hexagon { r: 1.0 });
        assert!((reuleaux_min_area(&hex).unwrap() - R3).abs() < 1e-9);
        let sq = shape(ShapeSpec::Square);
        assert!((reuleaux_min_area(&sq).unwrap() - 4.0).abs() < 1e-9);
        let t = reuleaux_minimal(&sq).unwrap();
        assert!((t.body.area() - 4.0).abs() < 1e-9);
    }

    #[test]
    fn constant_width_two() {
        let m = shape(ShapeSpec::RandomSymmetric { n: 12, seed: 5 });
        let x = m.vertices()[0];
        let t = reuleaux_triangle(&m, x).unwrap();
        for i in 0..64 {
            let u = Point::from_angle(i as f64 * PI / 64.0);
            let w = 2.0 * t.body.width(u) / m.width(u);
            assert!((w - 2.0).abs() < 2e-3);
        }
    }
}
