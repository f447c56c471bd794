//! SVG figures of the constructions.
//!
//! Output is SVG 1.1 with a fixed `viewBox` of `-2 -2 4 4`, y pointing up,
//! and coordinates printed with two decimals. Scenes larger than the box
//! are shrunk uniformly to fit. Each layer is one `<path>` whose `class`
//! names its role, so the files can be checked structurally.

use std::fmt::Write as _;

use normhull::hull_tr::{reuleaux_minimal, reuleaux_triangle, translation_body};
use normhull::m0::m0_body;
use normhull::normvol::{radon_extensions, radon_normalize};
use normhull::{Body, Direction, M0Params, Point};

use crate::error::Result;

/// Half-width of the drawing area that content is fitted into.
const FIT: f64 = 1.9;
/// Samples per elliptic arc in the M₀ figure.
const ARC_SAMPLES: usize = 64;

pub enum Scene {
    /// Reuleaux triangle of the norm with unit disk `norm`. With `x` set to
    /// an angle, the corner direction is that boundary point; otherwise the
    /// minimal-area triangle is drawn.
    Reuleaux { norm: Body, x: Option<f64> },
    /// `M` in the Radon frame, the rotated polar and the two splices.
    Radon { norm: Body },
    /// `K`, `v + K` and their convex hull. Without `v`, the maximizing
    /// translation is used.
    Translate { body: Body, v: Option<Point> },
    /// M₀ for semi-axis `a`, with the square and the four elliptic arcs.
    M0 { a: f64, resolution: usize },
}

struct Layer {
    class: &'static str,
    stroke: &'static str,
    points: Vec<Point>,
    closed: bool,
}

impl Layer {
    fn outline(class: &'static str, stroke: &'static str, body: &Body) -> Self {
        Layer {
            class,
            stroke,
            points: body.vertices().to_vec(),
            closed: true,
        }
    }

    fn open(class: &'static str, stroke: &'static str, points: Vec<Point>) -> Self {
        Layer {
            class,
            stroke,
            points,
            closed: false,
        }
    }
}

fn coord(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_owned()
    } else {
        s
    }
}

fn document(layers: &[Layer], labels: &[(&str, Point, String)]) -> String {
    let extent = layers
        .iter()
        .flat_map(|l| l.points.iter())
        .chain(labels.iter().map(|(_, p, _)| p))
        .fold(0.0f64, |m, p| m.max(p.x.abs()).max(p.y.abs()));
    let scale = if extent > FIT { FIT / extent } else { 1.0 };
    let xy = |p: Point| format!("{} {}", coord(p.x * scale), coord(-p.y * scale));

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"-2 -2 4 4\" width=\"400\" height=\"400\">\n",
    );
    out.push_str("<g fill=\"none\" stroke-width=\"0.015\" stroke-linejoin=\"round\">\n");
    for layer in layers {
        let mut d = String::new();
        for (i, p) in layer.points.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            write!(d, "{cmd}{} ", xy(*p)).unwrap();
        }
        d.push(if layer.closed { 'Z' } else { ' ' });
        writeln!(
            out,
            "<path class=\"{}\" stroke=\"{}\" d=\"{}\"/>",
            layer.class,
            layer.stroke,
            d.trim_end()
        )
        .unwrap();
    }
    out.push_str("</g>\n");
    for (class, at, text) in labels {
        let (x, y) = (coord(at.x * scale), coord(-at.y * scale));
        writeln!(
            out,
            "<text class=\"{class}\" x=\"{x}\" y=\"{y}\" font-size=\"0.2\" \
             font-family=\"sans-serif\" text-anchor=\"middle\">{text}</text>"
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

pub fn render(scene: &Scene) -> Result<String> {
    match scene {
        Scene::Reuleaux { norm, x } => {
            let r = match x {
                Some(angle) => {
                    let u = Direction::new(*angle).vector();
                    reuleaux_triangle(norm, u / norm.gauge(u)?)?
                }
                None => reuleaux_minimal(norm)?,
            };
            let [o, x, y] = r.vertices;
            // The stored body has width two; the figure uses the unit-width
            // triangle with corners o, x, y.
            let mut layers = vec![
                Layer::outline("norm", "#444444", norm),
                Layer::outline("hexagon", "#1f77b4", &r.hexagon.figure),
                Layer {
                    class: "triangle",
                    stroke: "#2ca02c",
                    points: vec![o, x, y],
                    closed: true,
                },
            ];
            for arc in &r.arcs {
                let half = arc.iter().map(|&p| p * 0.5).collect();
                layers.push(Layer::open("arc-side", "#d62728", half));
            }
            Ok(document(&layers, &[]))
        }
        Scene::Radon { norm } => {
            let (_, m) = radon_normalize(norm)?;
            let rotated = m.polar()?.rot90();
            let ext = radon_extensions(&m)?;
            let layers = [
                Layer::outline("norm", "#444444", &m),
                Layer::outline("rotated-polar", "#1f77b4", &rotated),
                Layer::outline("extension-1", "#d62728", &ext.m1),
                Layer::outline("extension-2", "#2ca02c", &ext.m2),
            ];
            Ok(document(&layers, &[]))
        }
        Scene::Translate { body, v } => {
            let v = match v {
                Some(v) => *v,
                None => normhull::hull_tr::c_tr_euclidean(body).witness,
            };
            let hull = translation_body(body, v);
            let layers = [
                Layer::outline("body", "#444444", body),
                Layer::outline("translate", "#1f77b4", &body.translate(v)),
                Layer::outline("hull", "#d62728", &hull),
            ];
            let top = hull.support_point(Point::new(0.0, 1.0));
            let at = Point::new(hull.centroid().x, top.y + 0.15);
            let label = ("hull-area", at, format!("{:.2}", hull.area()));
            Ok(document(&layers, &[label]))
        }
        Scene::M0 { a, resolution } => {
            let params = M0Params::new(*a, *resolution)?;
            let body = m0_body(&params)?;
            let h = std::f64::consts::FRAC_1_SQRT_2;
            let square = [Point::new(h, h), Point::new(-h, h), Point::new(-h, -h), Point::new(h, -h)];
            let (a, b) = (params.a(), params.b());
            // Parameter range of the top arc between (h, h) and (-h, h).
            let t0 = (h / a).acos();
            let top: Vec<Point> = (0..=ARC_SAMPLES)
                .map(|k| {
                    let t = t0 + (std::f64::consts::PI - 2.0 * t0) * k as f64 / ARC_SAMPLES as f64;
                    Point::new(a * t.cos(), b * t.sin())
                })
                .collect();
            let mut layers = vec![
                Layer::outline("m0", "#444444", &body),
                Layer {
                    class: "square",
                    stroke: "#1f77b4",
                    points: square.to_vec(),
                    closed: true,
                },
            ];
            let mut arc = top;
            for _ in 0..4 {
                layers.push(Layer::open("elliptic-arc", "#d62728", arc.clone()));
                arc = arc.iter().map(|p| p.perp()).collect();
            }
            Ok(document(&layers, &[]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use normhull::body::make_shape;
    use normhull::Shape;

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!("class=\"{class}\"")).count()
    }

    #[test]
    fn coordinates_have_two_decimals_and_no_negative_zero() {
        assert_eq!(coord(-0.001), "0.00");
        assert_eq!(coord(1.005), "1.00");
        assert_eq!(coord(-1.25), "-1.25");
    }

    #[test]
    fn reuleaux_figure_structure() {
        let hex = make_shape(&Shape::Hexagon { r: 1.0 }).unwrap();
        let svg = render(&Scene::Reuleaux { norm: hex, x: None }).unwrap();
        assert_eq!(count(&svg, "arc-side"), 3);
        assert_eq!(count(&svg, "hexagon"), 1);
        assert!(svg.contains("viewBox=\"-2 -2 4 4\""));
    }

    #[test]
    fn m0_figure_structure() {
        let svg = render(&Scene::M0 { a: 1.61803, resolution: 256 }).unwrap();
        assert_eq!(count(&svg, "elliptic-arc"), 4);
        assert_eq!(count(&svg, "square"), 1);
    }

    #[test]
    fn translate_annotation() {
        let sq = make_shape(&Shape::Square).unwrap();
        let svg = render(&Scene::Translate {
            body: sq.clone(),
            v: Some(Point::new(2.0, 0.0)),
        })
        .unwrap();
        assert!(svg.contains(">8.00</text>"));
        let svg = render(&Scene::Translate { body: sq, v: None }).unwrap();
        assert!(svg.contains(">12.00</text>"));
    }

    #[test]
    fn radon_figure_structure() {
        let disk = make_shape(&Shape::RandomSymmetric { n: 7, seed: 2 }).unwrap();
        let svg = render(&Scene::Radon { norm: disk }).unwrap();
        for class in ["norm", "rotated-polar", "extension-1", "extension-2"] {
            assert_eq!(count(&svg, class), 1, "{class}");
        }
    }
}
