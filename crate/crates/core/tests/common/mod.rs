#![allow(dead_code)]

use normhull::body::{make_shape, AffineMap, ShapeSpec};
use normhull::{Body, Point};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_body(seed: u64, n: usize, symmetric: bool) -> Body {
    let spec = if symmetric {
        ShapeSpec::RandomSymmetric { n, seed }
    } else {
        ShapeSpec::Random { n, seed }
    };
    make_shape(&spec).unwrap()
}

/// General bodies re-centred at the centroid, and symmetric ones as built.
pub fn arb_body() -> impl Strategy<Value = Body> {
    (any::<u64>(), 3usize..40, any::<bool>()).prop_map(|(seed, n, sym)| {
        let b = random_body(seed, n, sym);
        if sym {
            b
        } else {
            b.translate(-b.centroid())
        }
    })
}

pub fn arb_symmetric() -> impl Strategy<Value = Body> {
    (any::<u64>(), 3usize..30).prop_map(|(seed, n)| random_body(seed, n, true))
}

/// `R(α) · diag(s, s/κ) · R(β)` with condition number `κ ∈ [1, 10]`.
pub fn random_linear(seed: u64) -> AffineMap<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alpha: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let beta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let kappa: f64 = rng.gen_range(1.0..10.0);
    let s: f64 = rng.gen_range(0.5..2.0);
    let flip = if rng.gen_bool(0.5) { -1.0 } else { 1.0 };
    let d = AffineMap::scaling(s, flip * s / kappa).unwrap();
    AffineMap::rotation(alpha).compose(&d).compose(&AffineMap::rotation(beta))
}

pub fn arb_linear() -> impl Strategy<Value = AffineMap<f64>> {
    any::<u64>().prop_map(random_linear)
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

pub fn pt(x: f64, y: f64) -> Point {
    Point::new(x, y)
}
