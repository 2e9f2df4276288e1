//! Deterministic SVG drawings of the curve, its cells and boundary.
//!
//! Everything is drawn in rotated-lattice coordinates (see
//! [`crate::polyomino::phi`]) so all output numbers are integers.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::curve::{dragon_path, CurvePath};
use crate::error::Result;
use crate::lsystem::dragon;
use crate::polyomino::{phi, TracedBoundary, Vertex};

pub const CURVE_COLOR: &str = "#808080";
pub const LEFT_COLOR: &str = "#1f4fd6";
pub const RIGHT_COLOR: &str = "#d61f1f";
pub const FULL_COLOR: &str = "#000000";
pub const CELL_COLOR: &str = "#e4e4e4";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Layer {
    Cells,
    Curve,
    Full,
    Left,
    Right,
}

impl FromStr for Layer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "cells" => Self::Cells,
            "curve" => Self::Curve,
            "full" => Self::Full,
            "left" => Self::Left,
            "right" => Self::Right,
            _ => return Err(format!("unknown layer {s:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RenderSpec {
    pub n: usize,
    /// Drawn bottom to top in the order given.
    pub layers: Vec<Layer>,
    /// Pixels per lattice unit.
    pub scale: i64,
}

impl RenderSpec {
    pub fn curve(n: usize) -> Self {
        Self {
            n,
            layers: vec![Layer::Curve],
            scale: 8,
        }
    }

    /// Gray curve under the left (blue) and right (red) boundary.
    pub fn boundary(n: usize) -> Self {
        Self {
            n,
            layers: vec![Layer::Curve, Layer::Left, Layer::Right],
            scale: 8,
        }
    }
}

struct Canvas {
    scale: i64,
    min_a: i64,
    max_a: i64,
    min_b: i64,
    max_b: i64,
    body: String,
}

impl Canvas {
    fn new(scale: i64, points: impl Iterator<Item = Vertex>) -> Self {
        let (mut min_a, mut max_a, mut min_b, mut max_b) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for v in points {
            min_a = min_a.min(v.a);
            max_a = max_a.max(v.a);
            min_b = min_b.min(v.b);
            max_b = max_b.max(v.b);
        }
        Self {
            scale,
            min_a,
            max_a,
            min_b,
            max_b,
            body: String::new(),
        }
    }

    // svg y grows downward
    fn xy(&self, v: Vertex) -> (i64, i64) {
        (v.a * self.scale, -v.b * self.scale)
    }

    fn stroke_width(&self) -> i64 {
        (self.scale / 4).max(1)
    }

    fn polyline(&mut self, pts: &[Vertex], color: &str) {
        let mut d = String::new();
        for (i, &v) in pts.iter().enumerate() {
            let (x, y) = self.xy(v);
            let _ = write!(d, "{}{x},{y}", if i == 0 { "" } else { " " });
        }
        let _ = writeln!(
            self.body,
            r#"<polyline points="{d}" fill="none" stroke="{color}" stroke-width="{}" stroke-linejoin="round" stroke-linecap="round"/>"#,
            self.stroke_width()
        );
    }

    fn cell(&mut self, a: i64, b: i64) {
        let (x, y) = self.xy(Vertex::new(a, b + 1));
        let s = self.scale;
        let _ = writeln!(
            self.body,
            r#"<rect x="{x}" y="{y}" width="{s}" height="{s}" fill="{CELL_COLOR}"/>"#
        );
    }

    fn finish(self) -> String {
        let w = (self.max_a - self.min_a) * self.scale;
        let h = (self.max_b - self.min_b) * self.scale;
        let margin = ((w.max(h) + 19) / 20).max(self.scale);
        let x0 = self.min_a * self.scale - margin;
        let y0 = -self.max_b * self.scale - margin;
        let (vw, vh) = (w + 2 * margin, h + 2 * margin);
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0} {y0} {vw} {vh}\" width=\"{vw}\" height=\"{vh}\">\n\
             <rect x=\"{x0}\" y=\"{y0}\" width=\"{vw}\" height=\"{vh}\" fill=\"#ffffff\"/>\n{}</svg>\n",
            self.body
        )
    }
}

fn curve_vertices(path: &CurvePath) -> Vec<Vertex> {
    path.vertices().iter().map(|&p| phi(p)).collect()
}

/// Renders the requested layers of iterate `n`.
pub fn render_svg(spec: &RenderSpec) -> Result<String> {
    let path = dragon_path(&dragon().iterate(spec.n));
    let curve = curve_vertices(&path);
    let needs_boundary = spec
        .layers
        .iter()
        .any(|l| matches!(l, Layer::Cells | Layer::Full | Layer::Left | Layer::Right));
    let traced = needs_boundary
        .then(|| TracedBoundary::from_path(spec.n, &path))
        .transpose()?;

    let extent = curve
        .iter()
        .copied()
        .chain(traced.iter().flat_map(|t| t.cycle.vertices().iter().copied()));
    let mut canvas = Canvas::new(spec.scale.max(1), extent);

    for layer in &spec.layers {
        match (layer, &traced) {
            (Layer::Curve, _) => canvas.polyline(&curve, CURVE_COLOR),
            (Layer::Cells, Some(t)) => t.cells.iter().for_each(|c| canvas.cell(c.a, c.b)),
            (Layer::Full, Some(t)) => canvas.polyline(t.cycle.vertices(), FULL_COLOR),
            (Layer::Left, Some(t)) => {
                let split = 2 * t.left.len();
                canvas.polyline(&t.cycle.vertices()[..=split], LEFT_COLOR);
            }
            (Layer::Right, Some(t)) => {
                let split = 2 * t.left.len();
                canvas.polyline(&t.cycle.vertices()[split..], RIGHT_COLOR);
            }
            _ => unreachable!("boundary traced whenever a boundary layer is requested"),
        }
    }
    Ok(canvas.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_segment() {
        let svg = render_svg(&RenderSpec::curve(0)).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains(r#"points="0,0 8,8""#), "{svg}");
    }

    #[test]
    fn deterministic_and_integral() {
        let spec = RenderSpec {
            n: 6,
            layers: vec![Layer::Cells, Layer::Curve, Layer::Left, Layer::Right, Layer::Full],
            scale: 5,
        };
        let a = render_svg(&spec).unwrap();
        assert_eq!(a, render_svg(&spec).unwrap());
        let numeric_dot = a
            .as_bytes()
            .windows(3)
            .any(|w| w[0].is_ascii_digit() && w[1] == b'.' && w[2].is_ascii_digit());
        assert!(!numeric_dot, "non-integer output");
        assert_eq!(a.matches("<rect").count(), 64 + 1);
    }

    #[test]
    fn boundary_colors() {
        let svg = render_svg(&RenderSpec::boundary(8)).unwrap();
        assert!(svg.contains(LEFT_COLOR) && svg.contains(RIGHT_COLOR) && svg.contains(CURVE_COLOR));
    }

    #[test]
    fn layer_names() {
        assert_eq!("left".parse::<Layer>(), Ok(Layer::Left));
        assert!("blue".parse::<Layer>().is_err());
    }
}
