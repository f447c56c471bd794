//! Translation and reflection bodies and the functionals built on them.
//!
//! For a convex body `K` with central symmetral `M`, the largest
//! translation body `conv(K ∪ (v + K))` with `K ∩ (v + K) ≠ ∅` has area
//! `λ(K) + max_u d_K(u)·w_K(u^⊥)`, and the maximum equals `2λ(P)` with
//! `P` the largest parallelogram inscribed in `M`. All `c_tr` values here
//! come from that chord–width form.

mod reflection;
mod reuleaux;
mod steiner;

pub use reflection::{c_p_normed, c_p_normed_in, reflection_body, REFLECTION_GRID};
pub use reuleaux::{reuleaux_min_area, reuleaux_minimal, reuleaux_triangle, ReuleauxTriangle};
pub use steiner::steiner_symmetrize;

use crate::body::{ConvexBody, Point};
use crate::error::Result;
use crate::extremal::max_chord_width_product;
use crate::normvol::{NormContext, VolumeKind};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct TranslationResult<T> {
    pub value: T,
    /// Translation vector (or reflection centre for `c_p`) at the maximum.
    pub witness: Point<T>,
    pub hull: Option<ConvexBody<T>>,
}

/// `conv(K ∪ (v + K))`.
pub fn translation_body<T: Scalar>(k: &ConvexBody<T>, v: Point<T>) -> ConvexBody<T> {
    if v.norm() <= T::geom_eps() {
        return k.clone();
    }
    let pts: Vec<_> = k.vertices().iter().flat_map(|&p| [p, p + v]).collect();
    ConvexBody::from_points(&pts).expect("hull of a body and its translate is a body")
}

/// `K ⊕ (−K)`.
pub fn difference_body<T: Scalar>(k: &ConvexBody<T>) -> ConvexBody<T> {
    k.difference_body()
}

/// `max λ(conv(K ∪ (v + K))) / λ(K)` over admissible `v`.
pub fn c_tr_euclidean<T: Scalar>(k: &ConvexBody<T>) -> TranslationResult<T> {
    let r = max_chord_width_product(k);
    let v = r.direction.vector() * r.chord;
    TranslationResult {
        value: T::one() + r.value / k.area(),
        witness: v,
        hull: Some(translation_body(k, v)),
    }
}

/// `c_tr^τ(K)`, measured in the norm whose unit disk is the central
/// symmetral of `K`.
pub fn c_tr_normed<T: Scalar>(k: &ConvexBody<T>, kind: VolumeKind) -> Result<TranslationResult<T>> {
    let ctx = NormContext::new(k.central_symmetral())?;
    Ok(c_tr_normed_in(&ctx, k, kind))
}

/// [`c_tr_normed`] with a prebuilt context for `M = ½(K − K)`.
pub fn c_tr_normed_in<T: Scalar>(ctx: &NormContext<T>, k: &ConvexBody<T>, kind: VolumeKind) -> TranslationResult<T> {
    let r = max_chord_width_product(k);
    let v = r.direction.vector() * r.chord;
    TranslationResult {
        value: ctx.scalar(kind) * (k.area() + r.value),
        witness: v,
        hull: Some(translation_body(k, v)),
    }
}

/// `c_tr^τ(K)` through `max d·w = 2λ(P)`, without a direction search.
pub fn c_tr_normed_identity<T: Scalar>(ctx: &NormContext<T>, k: &ConvexBody<T>, kind: VolumeKind) -> T {
    ctx.scalar(kind) * (k.area() + T::of(2.0) * ctx.inscribed().area)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{make_shape, ShapeSpec};
    use std::f64::consts::PI;

    fn shape(spec: ShapeSpec<f64>) -> ConvexBody<f64> {
        make_shape(&spec).unwrap()
    }

    #[test]
    fn touching_squares() {
        let h = translation_body(&shape(ShapeSpec::Square), Point::new(2.0, 0.0));
        assert_eq!(h.area(), 8.0);
        assert_eq!(h.support(Point::new(1.0, 0.0)), 3.0);
        let k = shape(ShapeSpec::Random { n: 9, seed: 2 });
        assert_eq!(translation_body(&k, Point::origin()), k);
    }

    #[test]
    fn translation_body_area_formula() {
        let k = shape(ShapeSpec::Random { n: 20, seed: 7 });
        for i in 0..16 {
            let v = Point::from_angle(i as f64 * 0.4) * (0.1 + 0.07 * i as f64);
            let lhs = translation_body(&k, v).area();
            let rhs = k.area() + v.norm() * k.width(v.perp() / v.norm());
            assert!((lhs - rhs).abs() < 1e-12 * rhs);
        }
    }

    #[test]
    fn euclidean_values() {
        let r = c_tr_euclidean(&shape(ShapeSpec::Square));
        assert!((r.value - 3.0).abs() < 1e-9);
        assert!((r.hull.unwrap().area() - 12.0).abs() < 1e-8);
        let r = c_tr_euclidean(&shape(ShapeSpec::Disk { n: 4096 }));
        assert!((r.value - (1.0 + 4.0 / PI)).abs() < 1e-4);
        let r = c_tr_euclidean(&shape(ShapeSpec::Triangle));
        assert!((r.value - 3.0).abs() < 1e-9);
    }

    #[test]
    fn normed_values() {
        let tri = shape(ShapeSpec::Triangle);
        let sq = shape(ShapeSpec::Square);
        let disk = shape(ShapeSpec::Disk { n: 4096 });
        assert!((c_tr_normed(&tri, VolumeKind::Ht).unwrap().value - 18.0 / PI).abs() < 1e-4);
        assert!((c_tr_normed(&sq, VolumeKind::Bus).unwrap().value - 3.0 * PI).abs() < 1e-6);
        assert!((c_tr_normed(&disk, VolumeKind::M).unwrap().value - (PI + 4.0)).abs() < 1e-4);
        assert!((c_tr_normed(&sq, VolumeKind::MStar).unwrap().value - 12.0).abs() < 1e-6);
    }

    #[test]
    fn identity_matches_direction_search() {
        for seed in 0..5 {
            let k = shape(ShapeSpec::Random { n: 12, seed });
            let ctx = NormContext::new(k.central_symmetral()).unwrap();
            for kind in VolumeKind::ALL {
                let a = c_tr_normed_in(&ctx, &k, kind).value;
                let b = c_tr_normed_identity(&ctx, &k, kind);
                assert!((a - b).abs() < 1e-9 * b, "seed {seed} {kind}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn difference_bodies() {
        let d = difference_body(&shape(ShapeSpec::Square));
        assert_eq!(d.area(), 16.0);
        let t = shape(ShapeSpec::Triangle);
        let d = difference_body(&t);
        assert_eq!(d.len(), 6);
        assert!((d.area() - 6.0 * t.area()).abs() < 1e-12);
        let m = t.central_symmetral();
        let bus = PI * d.area() / m.area();
        assert!((bus - 4.0 * PI).abs() < 1e-12);
    }
}
