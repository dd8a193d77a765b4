//! Schematic SVG: each face as a regular polygon on a grid, glued sides
//! tagged with a shared number, chords drawn as straight segments.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::combsurf::Slot;
use crate::curves::End;
use crate::diagrams::{Diagram, Family};

const CELL: f64 = 120.0;
const R: f64 = 48.0;
const COLORS: [&str; 3] = ["#d62728", "#1f77b4", "#2ca02c"];

fn corner(cx: f64, cy: f64, n: usize, i: usize) -> (f64, f64) {
    let t = std::f64::consts::TAU * (i as f64) / (n as f64) - std::f64::consts::FRAC_PI_2;
    (cx + R * t.cos(), cy + R * t.sin())
}

pub fn render_svg(d: &Diagram) -> String {
    let dr = &d.drawing;
    let s = dr.surface();
    let faces: Vec<_> = s.face_ids().collect();
    let cols = (faces.len() as f64).sqrt().ceil().max(1.0) as usize;
    let rows = faces.len().div_ceil(cols).max(1);
    let centre: BTreeMap<_, (f64, f64)> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (*f, (CELL * ((i % cols) as f64 + 0.5), CELL * ((i / cols) as f64 + 0.5))))
        .collect();
    let circles = s.boundary_circles();
    let mut out = String::new();
    let (w, h) = (CELL * cols as f64, CELL * rows as f64);
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(
        out,
        r#"<metadata faces="{}" boundary_circles="{}" curves="{}"/>"#,
        faces.len(),
        circles.len(),
        dr.curves().len()
    );
    let edge_no: BTreeMap<Slot, usize> = s.edges().into_iter().enumerate().map(|(i, e)| (e, i)).collect();
    for f in &faces {
        let (cx, cy) = centre[f];
        let n = s.sides(*f);
        for i in 0..n {
            let (x1, y1) = corner(cx, cy, n, i);
            let (x2, y2) = corner(cx, cy, n, i + 1);
            let sl = Slot::new(*f, i);
            let (stroke, width) = if s.is_boundary(sl) { ("black", 3.0) } else { ("#999999", 1.0) };
            let _ = writeln!(out, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="{width}"/>"#);
            if let Some(k) = edge_no.get(&s.canonical(sl)).filter(|_| !s.is_boundary(sl)) {
                let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
                let (tx, ty) = (cx + (mx - cx) * 0.8, cy + (my - cy) * 0.8);
                let _ = writeln!(out, r##"<text x="{tx:.2}" y="{ty:.2}" font-size="7" fill="#666666">{k}</text>"##);
            }
        }
        let name = xml_escape(&s.face(*f).name);
        let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}" font-size="8" text-anchor="middle">{name}</text>"#, cx, cy + R + 10.0);
        if let Some(m) = s.mark_of_face(*f) {
            let _ = writeln!(out, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="3" fill="black"><title>{}</title></circle>"#, xml_escape(m));
        }
    }
    let family = |name: &str| -> (Option<usize>, bool) {
        for f in Family::ALL {
            if d.family(f).iter().any(|n| n == name) {
                return (Some(f.index()), false);
            }
            if d.shadow(f).iter().any(|n| n == name) {
                return (Some(f.index()), true);
            }
        }
        (None, false)
    };
    for c in dr.curves() {
        let (fam, arc) = family(&c.name);
        let color = fam.map_or("#7f7f7f", |i| COLORS[i]);
        let dash = if arc { r#" stroke-dasharray="4 2""# } else { "" };
        let _ = writeln!(out, r#"<g stroke="{color}" stroke-width="1.5"{dash}><title>{}</title>"#, xml_escape(&c.name));
        for ch in &c.chords {
            let (cx, cy) = centre[&ch.face];
            let n = s.sides(ch.face);
            let pos = |e: End| match e {
                End::Mark => (cx, cy),
                End::Point { side, point } => {
                    let sl = Slot::new(ch.face, side);
                    let k = dr.points_on(sl).len();
                    let t = (dr.local_index(sl, point) as f64 + 1.0) / (k as f64 + 1.0);
                    let (x1, y1) = corner(cx, cy, n, side);
                    let (x2, y2) = corner(cx, cy, n, side + 1);
                    (x1 + (x2 - x1) * t, y1 + (y2 - y1) * t)
                }
            };
            let ((x1, y1), (x2, y2)) = (pos(ch.a), pos(ch.b));
            let _ = writeln!(out, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::construct::cp2;

    #[test]
    fn cp2_smoke() {
        let svg = render_svg(&cp2().unwrap().0);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<g ").count(), 3);
        for c in COLORS {
            assert!(svg.contains(c));
        }
        assert!(svg.contains(r#"boundary_circles="0""#));
    }
}
