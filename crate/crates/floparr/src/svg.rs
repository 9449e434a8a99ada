//! Deterministic SVG line drawings of planar arrangements.
//!
//! The viewport is a fixed 600×600 canvas showing the box `[-R, R]²`, where
//! `R` is the window radius (1 for central arrangements). Lines are clipped
//! exactly and emitted in hyperplane order; level-0 lines get class `finite`,
//! translates get class `translate`.

use std::fmt::Write;

use floparr_core::rational::{int, ratio};
use floparr_core::{format_decimal, Arrangement, ChamberGraph, Hyperplane, Rational};

use crate::error::CliError;

pub const SIZE: i64 = 600;
const MARGIN: i64 = 20;

const STYLE: &str = "line.finite{stroke:#e4508c;stroke-width:2}\
line.translate{stroke:#9a9a9a;stroke-width:1}\
rect.window{fill:none;stroke:#404040;stroke-dasharray:4 3}\
circle.chamber{fill:#1f4e99}";

#[derive(Debug, Clone, Default)]
pub struct PlotOptions {
    /// Draw the window box outline.
    pub window: bool,
}

struct Frame {
    extent: Rational,
}

impl Frame {
    fn for_arrangement(arr: &Arrangement) -> Self {
        Self { extent: arr.kind().radius().cloned().unwrap_or_else(|| int(1)) }
    }

    fn scale(&self) -> Rational {
        int(SIZE / 2 - MARGIN) / &self.extent
    }

    fn px(&self, x: &Rational) -> String {
        format_decimal(&(int(SIZE / 2) + x * self.scale()), 3)
    }

    fn py(&self, y: &Rational) -> String {
        format_decimal(&(int(SIZE / 2) - y * self.scale()), 3)
    }
}

/// Endpoints of `h ∩ [-r, r]²`, ordered lexicographically. `None` if the
/// line misses the closed box.
pub fn clip(h: &Hyperplane, r: &Rational) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let (a, b, k) = (int(h.normal()[0]), int(h.normal()[1]), int(h.level()));
    let zero = int(0);
    let neg = -r.clone();
    let mut points: Vec<Vec<Rational>> = Vec::new();
    for side in [&neg, r] {
        if b != zero {
            let y = (&k - &a * side) / &b;
            if y >= neg && &y <= r {
                points.push(vec![side.clone(), y]);
            }
        }
        if a != zero {
            let x = (&k - &b * side) / &a;
            if x >= neg && &x <= r {
                points.push(vec![x, side.clone()]);
            }
        }
    }
    points.sort();
    points.dedup();
    let first = points.first()?.clone();
    let last = points.last()?.clone();
    Some((first, last))
}

/// Positive rescaling that keeps a central witness inside the frame.
fn dot_position(arr: &Arrangement, witness: &[Rational], extent: &Rational) -> Vec<Rational> {
    if arr.kind().is_window() {
        return witness.to_vec();
    }
    let zero = int(0);
    let norm = witness.iter().map(|v| if v < &zero { -v.clone() } else { v.clone() }).max().unwrap_or(zero);
    if norm == int(0) {
        return witness.to_vec();
    }
    let factor = extent * ratio(1, 2) / norm;
    witness.iter().map(|v| v * &factor).collect()
}

pub fn render(arr: &Arrangement, chambers: Option<&ChamberGraph>, opts: &PlotOptions) -> Result<String, CliError> {
    if arr.dim() != 2 {
        return Err(CliError::NotRankTwo(arr.dim()));
    }
    let frame = Frame::for_arrangement(arr);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, "<style>{STYLE}</style>").unwrap();
    writeln!(out, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#).unwrap();
    if opts.window {
        let lo = frame.px(&-frame.extent.clone());
        let side = format_decimal(&(int(2) * &frame.extent * frame.scale()), 3);
        writeln!(out, r#"<rect class="window" x="{lo}" y="{lo}" width="{side}" height="{side}"/>"#).unwrap();
    }
    for (i, h) in arr.hyperplanes().iter().enumerate() {
        let class = if h.level() == 0 { "finite" } else { "translate" };
        // window hyperplanes meet the open box, central ones pass through 0
        let (p, q) = clip(h, &frame.extent).expect("hyperplane meets the frame");
        writeln!(
            out,
            r#"<line class="{class}" data-hyperplane="{i}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            frame.px(&p[0]),
            frame.py(&p[1]),
            frame.px(&q[0]),
            frame.py(&q[1]),
        )
        .unwrap();
    }
    if let Some(g) = chambers {
        for c in g.chambers() {
            let at = dot_position(arr, &c.witness, &frame.extent);
            writeln!(
                out,
                r#"<circle class="chamber" data-chamber="{}" cx="{}" cy="{}" r="3"/>"#,
                c.id,
                frame.px(&at[0]),
                frame.py(&at[1]),
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
