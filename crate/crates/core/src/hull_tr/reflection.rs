use rayon::prelude::*;

use crate::body::{ConvexBody, Point};
use crate::error::{GeomError, Result};
use crate::normvol::{NormContext, VolumeKind};
use crate::optimize::nelder_mead_max;
use crate::scalar::Scalar;

use super::TranslationResult;

/// Grid points per axis of the reflection-centre search.
pub const REFLECTION_GRID: usize = 64;

/// `conv(K ∪ (2x − K))` for `x ∈ K`.
pub fn reflection_body<T: Scalar>(k: &ConvexBody<T>, x: Point<T>) -> Result<ConvexBody<T>> {
    if !k.contains(x, T::contain_eps()) {
        return Err(GeomError::PointOutside {
            distance: k.distance_to(x).to_f64_lossy(),
        });
    }
    Ok(reflect_unchecked(k, x))
}

fn reflect_unchecked<T: Scalar>(k: &ConvexBody<T>, x: Point<T>) -> ConvexBody<T> {
    let c = x * T::of(2.0);
    let pts: Vec<_> = k.vertices().iter().flat_map(|&p| [p, c - p]).collect();
    ConvexBody::from_points(&pts).expect("hull of a body and its reflection is a body")
}

/// `c_p^τ(K) = max_{x ∈ K} vol_M^τ(conv(K ∪ (2x − K)))` with `M = ½(K − K)`.
pub fn c_p_normed<T: Scalar>(k: &ConvexBody<T>, kind: VolumeKind) -> Result<TranslationResult<T>> {
    let ctx = NormContext::new(k.central_symmetral())?;
    Ok(c_p_normed_in(&ctx, k, kind))
}

/// [`c_p_normed`] with a prebuilt context.
///
/// Candidates are a 64×64 grid over the bounding box plus the vertices of
/// `K`; the best one is polished by Nelder–Mead. Near-ties go to the
/// lexicographically smallest centre.
pub fn c_p_normed_in<T: Scalar>(ctx: &NormContext<T>, k: &ConvexBody<T>, kind: VolumeKind) -> TranslationResult<T> {
    let (lo, hi) = bounding_box(k);
    let last = T::of_usize(REFLECTION_GRID - 1);
    let mut candidates: Vec<Point<T>> = (0..REFLECTION_GRID * REFLECTION_GRID)
        .map(|idx| {
            let (i, j) = (idx / REFLECTION_GRID, idx % REFLECTION_GRID);
            Point::new(
                lo.x + (hi.x - lo.x) * T::of_usize(i) / last,
                lo.y + (hi.y - lo.y) * T::of_usize(j) / last,
            )
        })
        .filter(|&x| k.contains(x, T::contain_eps()))
        .collect();
    candidates.extend_from_slice(k.vertices());
    let area = |x: Point<T>| {
        if k.contains(x, T::contain_eps()) {
            reflect_unchecked(k, x).area()
        } else {
            T::neg_infinity()
        }
    };
    let values: Vec<T> = candidates.par_iter().map(|&x| area(x)).collect();
    let tie = T::of(1e-12);
    let mut best = (candidates[0], values[0]);
    for (&x, &v) in candidates.iter().zip(&values) {
        let better = v > best.1 * (T::one() + tie);
        let tied = (v - best.1).abs() <= tie * best.1;
        if better || (tied && (x.x, x.y) < (best.0.x, best.0.y)) {
            best = (x, v);
        }
    }
    let scale = (hi - lo).norm() / last;
    let (x, v) = nelder_mead_max(area, best.0, scale, T::of(1e-8), 2000);
    if v > best.1 * (T::one() + tie) {
        best = (x, v);
    }
    TranslationResult {
        value: ctx.scalar(kind) * best.1,
        witness: best.0,
        hull: Some(reflect_unchecked(k, best.0)),
    }
}

fn bounding_box<T: Scalar>(k: &ConvexBody<T>) -> (Point<T>, Point<T>) {
    let v = k.vertices();
    let mut lo = v[0];
    let mut hi = v[0];
    for p in v {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{make_shape, ShapeSpec};
    use std::f64::consts::PI;

    #[test]
    fn symmetric_body_reflected_at_its_centre() {
        let k = make_shape::<f64>(&ShapeSpec::RandomSymmetric { n: 10, seed: 4 }).unwrap();
        let r = reflection_body(&k, Point::origin()).unwrap();
        assert!(r.hausdorff_distance(&k) < 1e-12);
    }

    #[test]
    fn corner_of_a_right_triangle() {
        let k = make_shape(&ShapeSpec::Polygon(vec![
            Point::new(0.0f64, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ]))
        .unwrap();
        let r = reflection_body(&k, Point::origin()).unwrap();
        assert_eq!(r.len(), 4);
        assert!((r.area() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn reflection_is_centred_at_x() {
        let k = make_shape::<f64>(&ShapeSpec::Random { n: 11, seed: 8 }).unwrap();
        let x = k.centroid() * 0.7 + k.vertices()[0] * 0.3;
        let r = reflection_body(&k, x).unwrap();
        assert!(r.translate(-x).asymmetry() < 1e-12);
    }

    #[test]
    fn outside_point_is_rejected() {
        let k = make_shape::<f64>(&ShapeSpec::Square).unwrap();
        assert!(matches!(
            reflection_body(&k, Point::new(2.0, 0.0)),
            Err(GeomError::PointOutside { .. })
        ));
    }

    #[test]
    fn square_reflected_at_a_vertex() {
        let k = make_shape::<f64>(&ShapeSpec::Square).unwrap();
        let r = reflection_body(&k, Point::new(1.0, 1.0)).unwrap();
        assert!((r.area() - 12.0).abs() < 1e-12);
        let c = c_p_normed(&k, VolumeKind::Bus).unwrap();
        assert!(c.value >= 3.0 * PI - 1e-6);
        assert_eq!(c.witness, Point::new(-1.0, -1.0));
    }

    #[test]
    fn c_p_is_at_least_the_normed_area() {
        for seed in 0..4 {
            let k = make_shape::<f64>(&ShapeSpec::Random { n: 9, seed }).unwrap();
            let ctx = NormContext::new(k.central_symmetral()).unwrap();
            for kind in VolumeKind::ALL {
                let c = c_p_normed_in(&ctx, &k, kind);
                assert!(c.value >= ctx.normed_area(kind, &k) - 1e-12);
                assert!(k.contains(c.witness, 1e-9));
            }
        }
    }
}
