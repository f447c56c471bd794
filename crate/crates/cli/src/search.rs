//! Random-restart hill climbing for extremal bodies of `c_tr^τ`.
//!
//! A state is a list of free points; the body is their convex hull (with
//! the negated points added in the symmetric class). Each step moves one
//! point by a uniform offset whose size shrinks geometrically, and keeps
//! the move unless the objective gets worse. Accepted states are mapped to
//! isotropic position, which the objective does not see but which keeps the
//! step size meaningful.
//!
//! Restart `i` draws from ChaCha8 seeded with the run seed on stream `i`,
//! so results do not depend on how rayon schedules the restarts.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use normhull::body::make_shape;
use normhull::hull_tr::c_tr_normed_identity;
use normhull::m0::m0_body;
use normhull::{Affine, Body, M0Params, NormContext, Point, Shape, VolumeKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::io::BodySpec;

/// Upper end of the Holmes–Thompson range, attained by the M₀ family.
pub const HT_MAX: f64 = 7.81111;
/// Allowed excursion outside a bracket before a value counts as a violation.
pub const BRACKET_SLACK: f64 = 1e-3;
/// Rotations tried by [`shape_distance`].
pub const SHAPE_ROTATIONS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Minimize,
    Maximize,
}

/// Sharp range of `c_tr^τ` over all planar bodies, or over o-symmetric ones.
pub fn bracket(kind: VolumeKind, symmetric: bool) -> (f64, f64) {
    match (kind, symmetric) {
        (VolumeKind::Bus, false) => (2.0 * PI, 3.0 * PI),
        (VolumeKind::Bus, true) => (PI + 4.0, 3.0 * PI),
        (VolumeKind::Ht, false) => (18.0 / PI, HT_MAX),
        (VolumeKind::Ht, true) => (21.0 / PI, HT_MAX),
        (VolumeKind::M, _) => (6.0, PI + 4.0),
        (VolumeKind::MStar, false) => (6.0, 12.0),
        (VolumeKind::MStar, true) => (7.0, 12.0),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    #[serde(with = "kind_name")]
    pub kind: VolumeKind,
    pub objective: Objective,
    pub symmetric: bool,
    /// Vertex budget of the body (counting both members of antipodal pairs).
    pub vertices: usize,
    pub iterations: usize,
    pub restarts: usize,
    pub seed: u64,
    /// Initial step length, in isotropic coordinates.
    pub step: f64,
    /// Per-iteration step multiplier.
    pub decay: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            kind: VolumeKind::Bus,
            objective: Objective::Minimize,
            symmetric: false,
            vertices: 8,
            iterations: 1000,
            restarts: 8,
            seed: 0,
            step: 0.5,
            decay: 0.995,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(CliError::Usage(msg));
        if self.iterations == 0 || self.restarts == 0 {
            return bad("iterations and restarts must be at least 1".into());
        }
        if self.vertices < 3 {
            return bad(format!("need at least 3 vertices, got {}", self.vertices));
        }
        if self.symmetric && (self.vertices < 4 || self.vertices % 2 == 1) {
            return bad(format!("symmetric bodies need an even vertex count >= 4, got {}", self.vertices));
        }
        if !(self.step > 0.0 && self.step.is_finite()) || !(self.decay > 0.0 && self.decay <= 1.0) {
            return bad("step must be positive and decay in (0, 1]".into());
        }
        Ok(())
    }

    fn free_points(&self) -> usize {
        if self.symmetric {
            self.vertices / 2
        } else {
            self.vertices
        }
    }
}

/// Serializes a [`VolumeKind`] as its short name.
mod kind_name {
    use normhull::VolumeKind;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(kind: &VolumeKind, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(kind.name())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<VolumeKind, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NearestShape {
    pub name: String,
    pub distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub config: SearchConfig,
    pub value: f64,
    pub best: BodySpec,
    /// Best value of each restart, in restart order.
    pub restarts: Vec<f64>,
    /// The value the search is heading for: the bracket end in the
    /// direction of the objective.
    pub optimum: f64,
    pub bracket: (f64, f64),
    /// Every value seen lies in the bracket up to [`BRACKET_SLACK`].
    pub bracket_ok: bool,
    pub nearest: NearestShape,
    pub distances: BTreeMap<String, f64>,
}

impl SearchOutcome {
    pub fn relative_gap(&self) -> f64 {
        (self.value - self.optimum).abs() / self.optimum
    }
}

fn hull_of(points: &[Point], symmetric: bool) -> Option<Body> {
    let body = if symmetric {
        let all: Vec<Point> = points.iter().flat_map(|&p| [p, -p]).collect();
        Body::from_points(&all)
    } else {
        Body::from_points(points)
    };
    body.ok()
}

fn evaluate(body: &Body, kind: VolumeKind) -> Option<f64> {
    let ctx = NormContext::new(body.central_symmetral()).ok()?;
    let v = c_tr_normed_identity(&ctx, body, kind);
    v.is_finite().then_some(v)
}

/// Centroid and second central moments `[xx, xy, yy]` of the region.
fn moments(body: &Body) -> (Point, [f64; 3]) {
    let v = body.vertices();
    let n = v.len();
    let (mut a, mut cx, mut cy, mut ixx, mut ixy, mut iyy) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    for i in 0..n {
        let (p, q) = (v[i], v[(i + 1) % n]);
        let c = p.cross(q);
        a += c;
        cx += (p.x + q.x) * c;
        cy += (p.y + q.y) * c;
        ixx += (p.x * p.x + p.x * q.x + q.x * q.x) * c;
        iyy += (p.y * p.y + p.y * q.y + q.y * q.y) * c;
        ixy += (p.x * q.y + 2.0 * p.x * p.y + 2.0 * q.x * q.y + q.x * p.y) * c;
    }
    a *= 0.5;
    let (cx, cy) = (cx / (6.0 * a), cy / (6.0 * a));
    let sxx = ixx / (12.0 * a) - cx * cx;
    let syy = iyy / (12.0 * a) - cy * cy;
    let sxy = ixy / (24.0 * a) - cx * cy;
    (Point::new(cx, cy), [sxx, sxy, syy])
}

/// The affine map sending `body` to isotropic position: centroid at the
/// origin and identity covariance. It is unique up to an orthogonal map.
fn isotropic_map(body: &Body) -> Option<Affine> {
    let (c, [a, b, d]) = moments(body);
    // Σ^{1/2} = (Σ + sI)/t with s = √det Σ, t = √(tr Σ + 2s).
    let s = (a * d - b * b).sqrt();
    let t = (a + d + 2.0 * s).sqrt();
    let root = [[(a + s) / t, b / t], [b / t, (d + s) / t]];
    let det = root[0][0] * root[1][1] - root[0][1] * root[1][0];
    if !(det > 1e-12) {
        return None;
    }
    let inv = [[root[1][1] / det, -root[0][1] / det], [-root[1][0] / det, root[0][0] / det]];
    let shift = Point::new(
        -(inv[0][0] * c.x + inv[0][1] * c.y),
        -(inv[1][0] * c.x + inv[1][1] * c.y),
    );
    Affine::new(inv, shift).ok()
}

pub fn isotropic(body: &Body) -> Option<Body> {
    isotropic_map(body).map(|m| body.apply_affine(&m))
}

/// Affine-invariant distance between two bodies: both are put in isotropic
/// position, and the smallest Hausdorff distance over [`SHAPE_ROTATIONS`]
/// rotations of one of them, with and without a reflection, is returned.
///
/// This scans a finite set of normalizations rather than solving for the
/// Banach–Mazur distance, so it is a heuristic upper bound on how far the
/// shapes are from each other.
pub fn shape_distance(a: &Body, b: &Body) -> f64 {
    let (Some(a), Some(b)) = (isotropic(a), isotropic(b)) else {
        return f64::INFINITY;
    };
    let mirror = Affine::linear([[1.0, 0.0], [0.0, -1.0]]).expect("reflection is regular");
    let b_mirror = b.apply_affine(&mirror);
    (0..SHAPE_ROTATIONS)
        .flat_map(|k| {
            let angle = TAU * k as f64 / SHAPE_ROTATIONS as f64;
            [&b, &b_mirror].map(|c| a.hausdorff_distance(&c.rotate(angle)))
        })
        .fold(f64::INFINITY, f64::min)
}

/// The extremizers of the translation constants, by name.
pub fn named_shapes() -> Vec<(&'static str, Body)> {
    let shape = |s: Shape| make_shape(&s).expect("named shapes are valid");
    vec![
        ("triangle", shape(Shape::Triangle)),
        ("parallelogram", shape(Shape::Square)),
        ("hexagon", shape(Shape::Hexagon { r: 1.0 })),
        ("ellipse", shape(Shape::Disk { n: 512 })),
        (
            "m0",
            m0_body(&M0Params::new(1.61803, 128).expect("valid m0 parameter")).expect("m0 body"),
        ),
    ]
}

struct Restart {
    value: f64,
    body: Body,
    in_bracket: bool,
}

fn better(objective: Objective, new: f64, old: f64) -> bool {
    match objective {
        Objective::Maximize => new >= old,
        Objective::Minimize => new <= old,
    }
}

fn run_restart(cfg: &SearchConfig, index: usize) -> Restart {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let (lo, hi) = bracket(cfg.kind, cfg.symmetric);
    let in_range = |v: f64| v >= lo - BRACKET_SLACK && v <= hi + BRACKET_SLACK;
    let mut in_bracket = true;
    let k = cfg.free_points();

    let (mut points, mut body, mut value) = loop {
        let pts: Vec<Point> = (0..k)
            .map(|_| {
                let r: f64 = rng.gen::<f64>().sqrt();
                Point::from_angle(rng.gen_range(0.0..TAU)) * r
            })
            .collect();
        if let Some(body) = hull_of(&pts, cfg.symmetric) {
            if let Some(v) = evaluate(&body, cfg.kind) {
                break (pts, body, v);
            }
        }
    };
    in_bracket &= in_range(value);

    let mut step = cfg.step;
    for _ in 0..cfg.iterations {
        let i = rng.gen_range(0..k);
        let offset = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * step;
        step *= cfg.decay;
        let mut trial = points.clone();
        trial[i] += offset;
        let Some(candidate) = hull_of(&trial, cfg.symmetric) else { continue };
        let Some(v) = evaluate(&candidate, cfg.kind) else { continue };
        in_bracket &= in_range(v);
        if !better(cfg.objective, v, value) {
            continue;
        }
        value = v;
        // Points that fell inside the hull are put back on its boundary so
        // that every point keeps contributing moves.
        let verts = candidate.vertices();
        for p in trial.iter_mut() {
            if candidate.interior_margin_of(*p) > 1e-9 {
                let j = rng.gen_range(0..verts.len());
                *p = verts[j].lerp(verts[(j + 1) % verts.len()], rng.gen_range(0.25..0.75));
            }
        }
        points = match isotropic_map(&candidate) {
            // Symmetric bodies stay centred; only the linear part applies.
            Some(map) if cfg.symmetric => trial.iter().map(|&p| map.apply_linear(p)).collect(),
            Some(map) => trial.iter().map(|&p| map.apply(p)).collect(),
            None => trial,
        };
        body = hull_of(&points, cfg.symmetric).unwrap_or(candidate);
    }
    Restart {
        value,
        body,
        in_bracket,
    }
}

pub fn run(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let runs: Vec<Restart> = (0..cfg.restarts).into_par_iter().map(|i| run_restart(cfg, i)).collect();
    let mut best = 0;
    for (i, r) in runs.iter().enumerate() {
        let incumbent = runs[best].value;
        if i > 0 && r.value != incumbent && better(cfg.objective, r.value, incumbent) {
            best = i;
        }
    }
    let winner = &runs[best];
    let distances: BTreeMap<String, f64> = named_shapes()
        .into_iter()
        .map(|(name, shape)| (name.to_owned(), shape_distance(&winner.body, &shape)))
        .collect();
    let (name, distance) = distances
        .iter()
        .fold(("", f64::INFINITY), |acc, (n, &d)| if d < acc.1 { (n.as_str(), d) } else { acc });
    let bracket = bracket(cfg.kind, cfg.symmetric);
    Ok(SearchOutcome {
        config: cfg.clone(),
        value: winner.value,
        best: BodySpec::from_body(&winner.body),
        restarts: runs.iter().map(|r| r.value).collect(),
        optimum: match cfg.objective {
            Objective::Minimize => bracket.0,
            Objective::Maximize => bracket.1,
        },
        bracket,
        bracket_ok: runs.iter().all(|r| r.in_bracket),
        nearest: NearestShape {
            name: name.to_owned(),
            distance,
        },
        distances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isotropic_position_has_identity_covariance() {
        let k = make_shape(&Shape::Random { n: 15, seed: 4 }).unwrap();
        let iso = isotropic(&k).unwrap();
        let (c, [a, b, d]) = moments(&iso);
        assert!(c.norm() < 1e-12);
        assert!((a - 1.0).abs() < 1e-12 && b.abs() < 1e-12 && (d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn moments_of_the_square() {
        let sq = make_shape(&Shape::Square).unwrap();
        let (c, [a, b, d]) = moments(&sq.translate(Point::new(3.0, -1.0)));
        assert!((c - Point::new(3.0, -1.0)).norm() < 1e-12);
        assert!((a - 1.0 / 3.0).abs() < 1e-12 && b.abs() < 1e-12 && (d - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn shape_distance_ignores_affine_maps() {
        let t = make_shape(&Shape::Triangle).unwrap();
        let map = Affine::new([[2.0, 0.7], [-0.3, 0.5]], Point::new(4.0, 1.0)).unwrap();
        assert!(shape_distance(&t, &t.apply_affine(&map)) < 0.1);
        let sq = make_shape(&Shape::Square).unwrap();
        assert!(shape_distance(&t, &sq) > 0.2);
    }

    #[test]
    fn config_validation() {
        let ok = SearchConfig::default();
        assert!(ok.validate().is_ok());
        for bad in [
            SearchConfig { iterations: 0, ..ok.clone() },
            SearchConfig { vertices: 2, ..ok.clone() },
            SearchConfig { symmetric: true, vertices: 5, ..ok.clone() },
            SearchConfig { decay: 1.5, ..ok.clone() },
        ] {
            assert!(matches!(bad.validate(), Err(CliError::Usage(_))));
        }
    }

    #[test]
    fn search_is_reproducible() {
        let cfg = SearchConfig {
            iterations: 60,
            restarts: 3,
            seed: 11,
            ..Default::default()
        };
        let a = run(&cfg).unwrap();
        let b = run(&cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.bracket_ok);
        assert_eq!(a.restarts.len(), 3);
    }
}
