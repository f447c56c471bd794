//! Body descriptors as they appear on disk and in reports.
//!
//! ```json
//! {"kind": "polygon", "vertices": [[0, 0], [1, 0], [0, 1]]}
//! {"kind": "ellipse", "a": 2.0, "b": 0.7, "n": 4096}
//! {"kind": "m0", "a": 1.61803}
//! ```
//!
//! Smooth shapes take their vertex count from `n`, falling back to the
//! command's `--resolution`.

use std::fs;
use std::path::Path;

use normhull::body::make_shape;
use normhull::m0::m0_body;
use normhull::{Body, M0Params, Point, Shape};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BodySpec {
    Polygon {
        vertices: Vec<[f64; 2]>,
    },
    Triangle,
    Square,
    Parallelogram {
        angle: f64,
    },
    Hexagon {
        #[serde(default = "one")]
        r: f64,
    },
    Ellipse {
        a: f64,
        b: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    Disk {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    Random {
        n: usize,
        seed: u64,
    },
    RandomSymmetric {
        n: usize,
        seed: u64,
    },
    M0 {
        a: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
}

fn one() -> f64 {
    1.0
}

impl BodySpec {
    /// Polygon descriptor listing the vertices of `body`.
    pub fn from_body(body: &Body) -> Self {
        BodySpec::Polygon {
            vertices: body.vertices().iter().map(|p| [p.x, p.y]).collect(),
        }
    }

    /// Builds the body, using `resolution` for smooth shapes without an
    /// explicit `n`.
    pub fn build(&self, resolution: usize) -> Result<Body> {
        let n_or = |n: &Option<usize>| n.unwrap_or(resolution);
        let shape = match self {
            BodySpec::Polygon { vertices } => {
                Shape::Polygon(vertices.iter().map(|&[x, y]| Point::new(x, y)).collect())
            }
            BodySpec::Triangle => Shape::Triangle,
            BodySpec::Square => Shape::Square,
            BodySpec::Parallelogram { angle } => Shape::Parallelogram { angle: *angle },
            BodySpec::Hexagon { r } => Shape::Hexagon { r: *r },
            BodySpec::Ellipse { a, b, n } => Shape::Ellipse { a: *a, b: *b, n: n_or(n) },
            BodySpec::Disk { n } => Shape::Disk { n: n_or(n) },
            BodySpec::Random { n, seed } => Shape::Random { n: *n, seed: *seed },
            BodySpec::RandomSymmetric { n, seed } => Shape::RandomSymmetric { n: *n, seed: *seed },
            BodySpec::M0 { a, n } => {
                return Ok(m0_body(&M0Params::new(*a, n_or(n))?)?);
            }
        };
        Ok(make_shape(&shape)?)
    }
}

pub fn parse_body(text: &str) -> Result<BodySpec> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_body(path: &Path) -> Result<BodySpec> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    parse_body(&text)
}

/// Writes `contents` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, contents: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, contents).map_err(|source| CliError::Write {
            path: p.to_owned(),
            source,
        }),
        None => {
            println!("{contents}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        let cases = [
            r#"{"kind":"polygon","vertices":[[0,0],[2,0],[0,2],[0.5,0.5]]}"#,
            r#"{"kind":"triangle"}"#,
            r#"{"kind":"square"}"#,
            r#"{"kind":"parallelogram","angle":1.0}"#,
            r#"{"kind":"hexagon"}"#,
            r#"{"kind":"ellipse","a":2,"b":0.5,"n":64}"#,
            r#"{"kind":"disk"}"#,
            r#"{"kind":"random","n":12,"seed":3}"#,
            r#"{"kind":"random_symmetric","n":6,"seed":3}"#,
            r#"{"kind":"m0","a":1.61803}"#,
        ];
        for text in cases {
            let spec = parse_body(text).unwrap();
            let body = spec.build(256).unwrap();
            assert!(body.area() > 0.0, "{text}");
        }
    }

    #[test]
    fn resolution_fills_in_missing_counts() {
        let disk = parse_body(r#"{"kind":"disk"}"#).unwrap().build(100).unwrap();
        assert_eq!(disk.len(), 100);
        let disk = parse_body(r#"{"kind":"disk","n":12}"#).unwrap().build(100).unwrap();
        assert_eq!(disk.len(), 12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_body(r#"{"kind":"blob"}"#), Err(CliError::Parse(_))));
        assert!(matches!(parse_body(r#"{"kind":"hexagon","radius":1}"#), Err(CliError::Parse(_))));
        let flat = parse_body(r#"{"kind":"polygon","vertices":[[0,0],[1,0],[2,0]]}"#).unwrap();
        assert!(matches!(flat.build(64), Err(CliError::Geometry(_))));
        let m0 = parse_body(r#"{"kind":"m0","a":0.5}"#).unwrap();
        assert!(matches!(m0.build(64), Err(CliError::Geometry(_))));
    }

    #[test]
    fn polygon_descriptors_round_trip_exactly() {
        let body = parse_body(r#"{"kind":"random","n":20,"seed":9}"#).unwrap().build(64).unwrap();
        let text = serde_json::to_string(&BodySpec::from_body(&body)).unwrap();
        let again = parse_body(&text).unwrap().build(64).unwrap();
        assert_eq!(again.vertices(), body.vertices());
    }
}
