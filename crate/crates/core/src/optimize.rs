//! Derivative-free maximizers used by the extremal searches.
//!
//! Everything here is deterministic: parallel coarse scans reduce with an
//! index-ordered argmax, so the first of several equal maxima always wins.

use rayon::prelude::*;

use crate::body::Point;
use crate::scalar::Scalar;

/// Golden-section maximization of `f` on `[lo, hi]` down to an interval of
/// width `tol`. Returns the best point evaluated and its value.
pub fn golden_section_max<T, F>(mut f: F, lo: T, hi: T, tol: T) -> (T, T)
where
    T: Scalar,
    F: FnMut(T) -> T,
{
    let inv_phi = (T::of(5.0).sqrt() - T::one()) / T::of(2.0);
    let (mut a, mut b) = (lo, hi);
    let mut c = b - (b - a) * inv_phi;
    let mut d = a + (b - a) * inv_phi;
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = if fd > fc { (d, fd) } else { (c, fc) };
    // 200 golden steps shrink any bracket by ~1e-42.
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c);
            if fc > best.1 {
                best = (c, fc);
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d);
            if fd > best.1 {
                best = (d, fd);
            }
        }
    }
    best
}

/// Coarse scan of `samples` equispaced points of `[lo, hi)` followed by a
/// golden-section polish on the two cells around the best sample. Extra
/// `candidates` (e.g. known kink locations) join the coarse scan.
pub fn scan_then_refine_max<T, F>(
    f: F,
    lo: T,
    hi: T,
    samples: usize,
    candidates: &[T],
    tol: T,
) -> (T, T)
where
    T: Scalar,
    F: Fn(T) -> T + Sync,
{
    let step = (hi - lo) / T::of_usize(samples);
    let mut params: Vec<T> = (0..samples).map(|k| lo + step * T::of_usize(k)).collect();
    params.extend_from_slice(candidates);
    let values: Vec<T> = params.par_iter().map(|&t| f(t)).collect();
    let (mut best_t, mut best_v) = (params[0], values[0]);
    for (&t, &v) in params.iter().zip(&values) {
        if v > best_v {
            best_t = t;
            best_v = v;
        }
    }
    let (t, v) = golden_section_max(&f, best_t - step, best_t + step, tol);
    if v > best_v {
        (t, v)
    } else {
        (best_t, best_v)
    }
}

/// Nelder–Mead maximization in the plane. `f` may return `-∞` to mark
/// infeasible points.
pub fn nelder_mead_max<T, F>(f: F, start: Point<T>, scale: T, tol: T, max_iter: usize) -> (Point<T>, T)
where
    T: Scalar,
    F: Fn(Point<T>) -> T,
{
    let half = T::of(0.5);
    let two = T::of(2.0);
    let mut simplex = [
        start,
        start + Point::new(scale, T::zero()),
        start + Point::new(T::zero(), scale),
    ];
    let mut vals = simplex.map(&f);
    for _ in 0..max_iter {
        // Sort descending: best first.
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap_or(std::cmp::Ordering::Equal));
        simplex = idx.map(|i| simplex[i]);
        vals = idx.map(|i| vals[i]);
        let spread = simplex[0].distance(simplex[1]).max(simplex[0].distance(simplex[2]));
        if spread <= tol {
            break;
        }
        let centroid = (simplex[0] + simplex[1]) * half;
        let worst = simplex[2];
        let reflected = centroid + (centroid - worst);
        let fr = f(reflected);
        if fr > vals[0] {
            let expanded = centroid + (centroid - worst) * two;
            let fe = f(expanded);
            if fe > fr {
                simplex[2] = expanded;
                vals[2] = fe;
            } else {
                simplex[2] = reflected;
                vals[2] = fr;
            }
        } else if fr > vals[1] {
            simplex[2] = reflected;
            vals[2] = fr;
        } else {
            let contracted = centroid + (worst - centroid) * half;
            let fc = f(contracted);
            if fc > vals[2] {
                simplex[2] = contracted;
                vals[2] = fc;
            } else {
                for k in 1..3 {
                    simplex[k] = simplex[0] + (simplex[k] - simplex[0]) * half;
                    vals[k] = f(simplex[k]);
                }
            }
        }
    }
    let mut best = 0;
    for k in 1..3 {
        if vals[k] > vals[best] {
            best = k;
        }
    }
    (simplex[best], vals[best])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, v) = golden_section_max(|x: f64| -(x - 0.3).powi(2) + 2.0, -1.0, 2.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-8);
        assert!((v - 2.0).abs() < 1e-15);
    }

    #[test]
    fn golden_finds_a_kink() {
        let (x, _) = golden_section_max(|x: f64| -(x - 1.234).abs(), 0.0, 3.0, 1e-12);
        assert!((x - 1.234).abs() < 1e-11);
    }

    #[test]
    fn scan_escapes_local_maximum() {
        let f = |x: f64| (3.0 * x).sin() + 0.5 * (-(x - 2.0).abs()).exp();
        let (x, _) = scan_then_refine_max(f, 0.0, 6.0, 600, &[], 1e-12);
        let brute = (0..600_000)
            .map(|k| k as f64 * 1e-5)
            .max_by(|a, b| f(*a).partial_cmp(&f(*b)).unwrap())
            .unwrap();
        assert!((x - brute).abs() < 1e-4);
    }

    #[test]
    fn nelder_mead_on_a_quadratic_bowl() {
        let f = |p: Point<f64>| -((p.x - 1.0).powi(2) + 2.0 * (p.y + 0.5).powi(2));
        let (p, v) = nelder_mead_max(f, Point::new(0.0, 0.0), 0.3, 1e-10, 500);
        assert!((p.x - 1.0).abs() < 1e-8 && (p.y + 0.5).abs() < 1e-8);
        assert!(v > -1e-15);
    }
}
