//! Static SVG braid diagrams: strands run top to bottom (`t = 0` at the
//! top), one crossing per row. At a positive crossing `σ_i` the strand
//! leaving position `i` passes over; the under-strand is drawn with a gap.
//! Strands of a designated base component get a distinct stroke, and
//! crossings can optionally be labelled with their signs.

use std::fmt::Write;

use braidlink_core::braid::{BraidWord, Sign, StrandSet};

const COL_W: f64 = 40.0;
const ROW_H: f64 = 48.0;
const MARGIN: f64 = 40.0;
const BASE_COLOR: &str = "#c0392b";
const OTHER_COLOR: &str = "#34495e";
const STROKE_W: f64 = 2.2;

#[derive(Debug, Clone, Default)]
pub struct RenderOptions {
    /// Strands drawn in the highlighted stroke.
    pub base: Option<StrandSet>,
    /// Label each crossing with its sign.
    pub labels: bool,
}

fn x(pos: usize) -> f64 {
    MARGIN + (pos - 1) as f64 * COL_W
}

fn y(row: usize) -> f64 {
    MARGIN + row as f64 * ROW_H
}

fn color(strand: usize, opts: &RenderOptions) -> &'static str {
    match &opts.base {
        Some(base) if base.contains(strand) => BASE_COLOR,
        _ => OTHER_COLOR,
    }
}

fn line(out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64, stroke: &str) {
    let _ = writeln!(
        out,
        r#"  <line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="{stroke}" stroke-width="{STROKE_W}" stroke-linecap="round"/>"#
    );
}

/// A straight segment drawn with a central gap, for the under-strand.
fn broken_line(out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64, stroke: &str) {
    let at = |t: f64| (x1 + (x2 - x1) * t, y1 + (y2 - y1) * t);
    let (gx1, gy1) = at(0.38);
    let (gx2, gy2) = at(0.62);
    line(out, x1, y1, gx1, gy1, stroke);
    line(out, gx2, gy2, x2, y2, stroke);
}

fn text(out: &mut String, x: f64, y: f64, size: u32, fill: &str, s: &str) {
    let _ = writeln!(
        out,
        r#"  <text x="{x:.1}" y="{y:.1}" font-family="monospace" font-size="{size}" fill="{fill}">{s}</text>"#
    );
}

/// Renders the braid diagram as an SVG 1.1 document.
pub fn render_svg(braid: &BraidWord, opts: &RenderOptions) -> String {
    let n = braid.n();
    let rows = braid.len().max(1);
    let label_pad = if opts.labels { 34.0 } else { 0.0 };
    let width = 2.0 * MARGIN + (n - 1) as f64 * COL_W + label_pad;
    let height = 2.0 * MARGIN + rows as f64 * ROW_H;

    let mut body = String::new();
    for p in 1..=n {
        text(&mut body, x(p) - 4.0, MARGIN - 14.0, 12, "#777777", &p.to_string());
    }
    text(&mut body, 4.0, MARGIN + 4.0, 12, "#777777", "t=0");
    text(&mut body, 4.0, height - MARGIN + 4.0, 12, "#777777", "t=1");

    let mut pos: Vec<usize> = (1..=n).collect();
    if braid.is_empty() {
        for p in 1..=n {
            line(&mut body, x(p), y(0), x(p), y(1), color(pos[p - 1], opts));
        }
    }
    for (row, letter) in braid.letters().iter().enumerate() {
        let i = letter.index;
        let (y0, y1) = (y(row), y(row + 1));
        for p in 1..=n {
            if p != i && p != i + 1 {
                line(&mut body, x(p), y0, x(p), y1, color(pos[p - 1], opts));
            }
        }
        let right_mover = pos[i - 1]; // from position i down to i+1
        let left_mover = pos[i]; // from position i+1 down to i
        match letter.sign {
            Sign::Positive => {
                broken_line(&mut body, x(i + 1), y0, x(i), y1, color(left_mover, opts));
                line(&mut body, x(i), y0, x(i + 1), y1, color(right_mover, opts));
            }
            Sign::Negative => {
                broken_line(&mut body, x(i), y0, x(i + 1), y1, color(right_mover, opts));
                line(&mut body, x(i + 1), y0, x(i), y1, color(left_mover, opts));
            }
        }
        if opts.labels {
            let sign = match letter.sign {
                Sign::Positive => "+1",
                Sign::Negative => "-1",
            };
            text(&mut body, x(i + 1) + 10.0, (y0 + y1) / 2.0 + 4.0, 12, "#555555", sign);
        }
        pos.swap(i - 1, i);
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    out.push_str(&body);
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_crossings_and_identity() {
        let b = BraidWord::parse("1 -2", 3).unwrap();
        let svg = render_svg(&b, &RenderOptions::default());
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("version=\"1.1\""));
        // two crossing rows, each with one vertical bystander strand plus
        // three crossing segments (over + split under)
        assert_eq!(svg.matches("<line").count(), 2 * 4);

        let id = BraidWord::parse("", 4).unwrap();
        let svg = render_svg(&id, &RenderOptions::default());
        assert_eq!(svg.matches("<line").count(), 4);
    }

    #[test]
    fn base_strands_get_their_own_stroke() {
        let b = BraidWord::parse("1 -2 -3 -3 -4", 5).unwrap();
        let opts = RenderOptions {
            base: Some([1, 2, 3].into_iter().collect()),
            labels: true,
        };
        let svg = render_svg(&b, &opts);
        assert!(svg.contains(BASE_COLOR));
        assert!(svg.contains(OTHER_COLOR));
        assert!(svg.contains(">+1</text>"));
        assert!(svg.contains(">-1</text>"));
    }
}
