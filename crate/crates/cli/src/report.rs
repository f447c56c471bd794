//! The `compute` report: areas, extremal figures and translation constants
//! of one body, plus the witnesses that realize them.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use normhull::hull_tr::{c_tr_euclidean, c_tr_normed_in};
use normhull::{Figure, NormContext, VolumeKind, Witness};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::io::BodySpec;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: BodySpec,
    pub quantities: Quantities,
    pub witnesses: Witnesses,
    pub meta: Meta,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quantities {
    /// `λ(K)`.
    pub area: f64,
    /// `λ(M)` with `M = ½(K − K)`.
    pub symmetral_area: f64,
    /// `λ(M°)`.
    pub polar_area: f64,
    /// `λ(P)`.
    pub inscribed_parallelogram_area: f64,
    /// `λ(P′)`.
    pub circumscribed_parallelogram_area: f64,
    /// `λ(H)`.
    pub hexagon_area: f64,
    pub c_tr_euclidean: f64,
    /// `c_tr^τ(K)` keyed by volume name.
    pub c_tr: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witnesses {
    pub inscribed_parallelogram: FigureReport,
    pub circumscribed_parallelogram: FigureReport,
    pub hexagon: FigureReport,
    pub translation: TranslationReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FigureReport {
    pub area: f64,
    pub figure: BodySpec,
    pub witness: WitnessReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessReport {
    /// Vertices `±p, ±q`.
    Inscribed { p: [f64; 2], q: [f64; 2] },
    /// Side normals, as angles in `[0, π)`.
    Circumscribed { u: f64, v: f64 },
    /// Vertex cycle `x, y, y − x, −x, −y, x − y`.
    Hexagon { x: [f64; 2], y: [f64; 2] },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TranslationReport {
    /// Maximizing translation vector.
    pub v: [f64; 2],
    /// `conv(K ∪ (v + K))`.
    pub hull: BodySpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub resolution: usize,
    pub seed: Option<u64>,
    /// Wall time of the computation; `null` when timing is disabled so that
    /// reports compare byte for byte.
    pub ms: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct ComputeOptions {
    pub kinds: Vec<VolumeKind>,
    pub resolution: usize,
    pub seed: Option<u64>,
    pub timing: bool,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions {
            kinds: VolumeKind::ALL.to_vec(),
            resolution: 4096,
            seed: None,
            timing: true,
        }
    }
}

fn xy(p: normhull::Point) -> [f64; 2] {
    [p.x, p.y]
}

fn figure_report(f: &Figure) -> FigureReport {
    let witness = match &f.witness {
        Witness::Inscribed { p, q } => WitnessReport::Inscribed { p: xy(*p), q: xy(*q) },
        Witness::Circumscribed { u, v } => WitnessReport::Circumscribed {
            u: u.angle(),
            v: v.angle(),
        },
        Witness::Hexagon { x, y } => WitnessReport::Hexagon { x: xy(*x), y: xy(*y) },
    };
    FigureReport {
        area: f.area,
        figure: BodySpec::from_body(&f.figure),
        witness,
    }
}

pub fn compute(spec: &BodySpec, opts: &ComputeOptions) -> Result<Report> {
    let start = Instant::now();
    let body = spec.build(opts.resolution)?;
    let ctx = NormContext::new(body.central_symmetral())?;
    let euclid = c_tr_euclidean(&body);
    let c_tr = opts
        .kinds
        .iter()
        .map(|&kind| (kind.name().to_owned(), c_tr_normed_in(&ctx, &body, kind).value))
        .collect();
    let quantities = Quantities {
        area: body.area(),
        symmetral_area: ctx.unit_disk().area(),
        polar_area: ctx.polar().area(),
        inscribed_parallelogram_area: ctx.inscribed().area,
        circumscribed_parallelogram_area: ctx.circumscribed().area,
        hexagon_area: ctx.hexagon().area,
        c_tr_euclidean: euclid.value,
        c_tr,
    };
    let hull = euclid.hull.as_ref().expect("translation results carry their hull");
    let witnesses = Witnesses {
        inscribed_parallelogram: figure_report(ctx.inscribed()),
        circumscribed_parallelogram: figure_report(ctx.circumscribed()),
        hexagon: figure_report(ctx.hexagon()),
        translation: TranslationReport {
            v: xy(euclid.witness),
            hull: BodySpec::from_body(hull),
        },
    };
    let ms = opts.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    Ok(Report {
        input: spec.clone(),
        quantities,
        witnesses,
        meta: Meta {
            resolution: opts.resolution,
            seed: opts.seed,
            ms,
        },
    })
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Plain-text summary for terminals.
    pub fn to_text(&self) -> String {
        let q = &self.quantities;
        let mut out = String::new();
        let mut line = |name: &str, v: f64| writeln!(out, "{name:<28} {v:.10}").unwrap();
        line("area", q.area);
        line("symmetral area", q.symmetral_area);
        line("polar area", q.polar_area);
        line("inscribed parallelogram", q.inscribed_parallelogram_area);
        line("circumscribed parallelogram", q.circumscribed_parallelogram_area);
        line("affine-regular hexagon", q.hexagon_area);
        line("c_tr (euclidean)", q.c_tr_euclidean);
        for (name, v) in &q.c_tr {
            line(&format!("c_tr ({name})"), *v);
        }
        if let Some(ms) = self.meta.ms {
            writeln!(out, "{:<28} {ms:.1} ms", "time").unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn run(spec: BodySpec) -> Report {
        let opts = ComputeOptions {
            timing: false,
            ..Default::default()
        };
        compute(&spec, &opts).unwrap()
    }

    #[test]
    fn triangle_report() {
        let r = run(BodySpec::Triangle);
        assert!((r.quantities.c_tr["ht"] - 18.0 / PI).abs() < 1e-6 * 18.0 / PI);
        assert!((r.quantities.c_tr["mstar"] - 6.0).abs() < 1e-6 * 6.0);
        assert!(r.meta.ms.is_none());
    }

    #[test]
    fn square_report() {
        let r = run(BodySpec::Square);
        let c = &r.quantities.c_tr;
        for (kind, want) in [("bus", 3.0 * PI), ("ht", 24.0 / PI), ("m", 6.0), ("mstar", 12.0)] {
            assert!((c[kind] - want).abs() < 1e-6 * want, "{kind}: {}", c[kind]);
        }
        assert_eq!(r.quantities.inscribed_parallelogram_area, 4.0);
    }

    #[test]
    fn hexagon_report() {
        let r = run(BodySpec::Hexagon { r: 1.0 });
        let c = r.quantities.c_tr["ht"];
        assert!((c - 21.0 / PI).abs() < 1e-6 * c);
        let WitnessReport::Hexagon { x, y } = r.witnesses.hexagon.witness else {
            panic!("hexagon witness")
        };
        assert!((3.0 * (x[0] * y[1] - x[1] * y[0]) - r.quantities.hexagon_area).abs() < 1e-12);
    }

    #[test]
    fn kinds_can_be_restricted() {
        let opts = ComputeOptions {
            kinds: vec![VolumeKind::M],
            timing: false,
            ..Default::default()
        };
        let r = compute(&BodySpec::Triangle, &opts).unwrap();
        assert_eq!(r.quantities.c_tr.keys().collect::<Vec<_>>(), ["m"]);
    }
}
