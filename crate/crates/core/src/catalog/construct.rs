//! Programmatic drawings behind the catalog entries.

use crate::cells::{SphereBelt, TorusGrid, BOTTOM, RIGHT, TOP};
use crate::combsurf::{CombSurface, FaceId, Slot};
use crate::curves::{ArcEnd, Drawing, DrawingBuilder};
use crate::diagrams::{Diagram, Family};
use crate::error::Result;

/// Curves available on the 4x4 torus grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusCurve {
    /// horizontal through row 0, at the given lane
    H(i64),
    /// vertical through column 0
    V,
    /// diagonal staircase
    D,
}

/// Cells of the 4x4 grid no torus curve touches.
pub const FREE_CELLS: [(usize, usize); 4] = [(1, 2), (1, 3), (2, 3), (3, 1)];

fn draw_torus_curve(b: &mut DrawingBuilder, t: &TorusGrid, name: &str, c: TorusCurve) -> Result<()> {
    match c {
        TorusCurve::H(lane) => b.closed(name, &(0..4).map(|k| (t.slot(0, k, RIGHT), lane)).collect::<Vec<_>>()),
        TorusCurve::V => b.closed(name, &(0..4).map(|k| (t.slot(k, 0, TOP), 1)).collect::<Vec<_>>()),
        TorusCurve::D => {
            let mut exits = Vec::new();
            for k in 0..4 {
                exits.push((t.slot(k, k, TOP), 5));
                exits.push((t.slot((k + 1) % 4, k, RIGHT), 0));
            }
            b.closed(name, &exits)
        }
    }
}

/// A genus-1 drawing with the given curves; returns it with the grid.
pub fn torus_piece(curves: &[(&str, TorusCurve)]) -> Result<(Drawing, TorusGrid)> {
    let t = TorusGrid::new(4);
    let mut b = DrawingBuilder::new(t.surface.clone());
    for (n, c) in curves {
        draw_torus_curve(&mut b, &t, n, *c)?;
    }
    Ok((b.finish()?, t))
}

pub fn free_cell(t: &TorusGrid, i: usize) -> FaceId {
    let (r, c) = FREE_CELLS[i];
    t.cell[r][c]
}

/// Adds `piece` as a connected summand, joining `at` (a free square of `d`) to
/// `piece_at`. Curve names of the piece get `prefix`.
pub fn sum_in(d: &mut Diagram, at: FaceId, piece: &Diagram, piece_at: FaceId, prefix: &str) -> Result<()> {
    let map = d.drawing.absorb(&piece.drawing, prefix, |n| format!("{prefix}{n}"))?;
    d.drawing.sum_along_faces(at, map[&piece_at])?;
    for f in Family::ALL {
        d.curves[f.index()].extend(piece.family(f).iter().map(|n| format!("{prefix}{n}")));
        d.arcs[f.index()].extend(piece.shadow(f).iter().map(|n| format!("{prefix}{n}")));
    }
    Ok(())
}

pub fn s4_genus0() -> Diagram {
    Diagram::new(Drawing::new(crate::combsurf::standard_surface(0, 0)))
}

/// Genus-1 diagram with one curve per family.
fn torus_diagram(a: TorusCurve, b: TorusCurve, c: TorusCurve) -> Result<(Diagram, TorusGrid)> {
    let (d, t) = torus_piece(&[("a", a), ("b", b), ("c", c)])?;
    let mut dg = Diagram::new(d);
    for (f, n) in Family::ALL.into_iter().zip(["a", "b", "c"]) {
        dg.curves[f.index()].push(n.into());
    }
    Ok((dg, t))
}

pub fn cp2() -> Result<(Diagram, TorusGrid)> {
    torus_diagram(TorusCurve::H(1), TorusCurve::V, TorusCurve::D)
}

/// Genus-1 diagram of S^4 whose parallel pair sits in families `i`, `i+1`.
pub fn stabilization_piece(i: usize) -> Result<(Diagram, TorusGrid)> {
    let mut kinds = [TorusCurve::V; 3];
    kinds[i % 3] = TorusCurve::H(1);
    kinds[(i + 1) % 3] = TorusCurve::H(2);
    torus_diagram(kinds[0], kinds[1], kinds[2])
}

/// The CP^2 diagram with two bridge points and three parallel short arcs.
pub fn cp1_shadow() -> Result<Diagram> {
    let t = TorusGrid::new(4);
    let mut s = t.surface.clone();
    let (p, q) = (t.cell[1][2], t.cell[1][3]);
    s.add_mark("P", p)?;
    s.add_mark("Q", q)?;
    let mut b = DrawingBuilder::new(s);
    draw_torus_curve(&mut b, &t, "a", TorusCurve::H(1))?;
    draw_torus_curve(&mut b, &t, "b", TorusCurve::V)?;
    draw_torus_curve(&mut b, &t, "c", TorusCurve::D)?;
    for (k, n) in ["sa", "sb", "sc"].iter().enumerate() {
        b.arc(n, ArcEnd::Mark(p), &[(Slot::new(p, RIGHT), k as i64)], ArcEnd::Mark(q))?;
    }
    let mut d = Diagram::new(b.finish()?);
    for (f, (c, a)) in Family::ALL.into_iter().zip([("a", "sa"), ("b", "sb"), ("c", "sc")]) {
        d.curves[f.index()].push(c.into());
        d.arcs[f.index()].push(a.into());
    }
    Ok(d)
}

/// Arc along the equator from mark cell `from` east to mark cell `to`.
fn equator_arc(b: &mut DrawingBuilder, sb: &SphereBelt, name: &str, from: &str, to: &str) -> Result<()> {
    let (i, j) = (sb.index(from), sb.index(to));
    let n = sb.ring.len();
    let mut exits = Vec::new();
    let mut k = i;
    while k != j {
        exits.push((Slot::new(sb.ring[k], RIGHT), 0));
        k = (k + 1) % n;
    }
    b.arc(name, ArcEnd::Mark(sb.cell(from)), &exits, ArcEnd::Mark(sb.cell(to)))
}

/// Arc through the north polygon between two ring cells.
fn north_arc(b: &mut DrawingBuilder, sb: &SphereBelt, name: &str, from: &str, to: &str) -> Result<()> {
    b.arc(name, ArcEnd::Mark(sb.cell(from)), &[(sb.side(from, TOP), 0), (sb.north_side(to), 0)], ArcEnd::Mark(sb.cell(to)))
}

/// Arc through the south polygon; lanes order the crossings on shared edges.
fn south_arc(b: &mut DrawingBuilder, sb: &SphereBelt, name: &str, from: &str, to: &str, lanes: (i64, i64)) -> Result<()> {
    b.arc(name, ArcEnd::Mark(sb.cell(from)), &[(sb.side(from, BOTTOM), lanes.0), (sb.south_side(to), lanes.1)], ArcEnd::Mark(sb.cell(to)))
}

fn shadow_from(b: DrawingBuilder, arcs: [&[&str]; 3], euler: Option<i64>) -> Result<Diagram> {
    let mut d = Diagram::new(b.finish()?);
    for f in Family::ALL {
        d.arcs[f.index()] = arcs[f.index()].iter().map(|s| s.to_string()).collect();
    }
    d.euler_number = euler;
    Ok(d)
}

/// Extra ring cells left free for connected sums.
pub const SPARE: [&str; 3] = ["Y1", "Y2", "Y3"];

/// Unknotted projective plane on the sphere: four bridge points on the
/// equator, two arcs of each family.
pub fn unknotted_rp2_shadow() -> Result<(Diagram, SphereBelt)> {
    let sb = SphereBelt::new(&["M1", "E1", "M2", "E2", "M3", "E3", "M4", "Y1", "Y2", "Y3"]);
    let mut b = DrawingBuilder::new(sb.surface.clone());
    equator_arc(&mut b, &sb, "a12", "M1", "M2")?;
    equator_arc(&mut b, &sb, "a34", "M3", "M4")?;
    equator_arc(&mut b, &sb, "b23", "M2", "M3")?;
    south_arc(&mut b, &sb, "b41", "M4", "M1", (1, 0))?;
    north_arc(&mut b, &sb, "c13", "M1", "M3")?;
    south_arc(&mut b, &sb, "c24", "M2", "M4", (0, 1))?;
    let d = shadow_from(b, [&["a12", "a34"], &["b23", "b41"], &["c13", "c24"]], Some(2))?;
    Ok((d, sb))
}

/// Unknotted torus on the sphere: six bridge points, three arcs per family.
pub fn unknotted_torus_shadow() -> Result<(Diagram, SphereBelt)> {
    let sb = SphereBelt::new(&["M1", "E1", "M2", "E2", "M3", "E3", "M4", "E4", "M5", "E5", "M6", "Z", "Y1", "Y2", "Y3"]);
    let mut b = DrawingBuilder::new(sb.surface.clone());
    equator_arc(&mut b, &sb, "a12", "M1", "M2")?;
    equator_arc(&mut b, &sb, "a34", "M3", "M4")?;
    equator_arc(&mut b, &sb, "a56", "M5", "M6")?;
    equator_arc(&mut b, &sb, "b23", "M2", "M3")?;
    equator_arc(&mut b, &sb, "b45", "M4", "M5")?;
    south_arc(&mut b, &sb, "b61", "M6", "M1", (0, 1))?;
    north_arc(&mut b, &sb, "c36", "M3", "M6")?;
    south_arc(&mut b, &sb, "c14", "M1", "M4", (1, 0))?;
    b.arc(
        "c25",
        ArcEnd::Mark(sb.cell("M2")),
        &[(sb.side("M2", TOP), 0), (sb.north_side("Z"), 0), (sb.side("Z", BOTTOM), 0), (sb.south_side("M5"), 0)],
        ArcEnd::Mark(sb.cell("M5")),
    )?;
    let d = shadow_from(b, [&["a12", "a34", "a56"], &["b23", "b45", "b61"], &["c14", "c25", "c36"]], None)?;
    Ok((d, sb))
}

/// Sums the three stabilization pieces into the spare ring cells of a shadow.
pub fn stabilize_thrice(d: &mut Diagram, sb: &SphereBelt) -> Result<()> {
    for i in 0..3 {
        let (piece, t) = stabilization_piece(i)?;
        sum_in(d, sb.cell(SPARE[i]), &piece, free_cell(&t, 0), &format!("s{i}_"))?;
    }
    Ok(())
}

/// Torus with two holes made by deleting two grid cells.
pub fn holed_torus_grid() -> (CombSurface, TorusGrid) {
    let t = TorusGrid::new(4);
    let mut s = t.surface.clone();
    for (k, (r, c)) in [(0usize, 0usize), (2, 2)].into_iter().enumerate() {
        let freed = s.delete_face(t.cell[r][c]).expect("cell exists");
        for slot in freed {
            s.set_label(slot, format!("d{k}"));
        }
    }
    (s, t)
}

/// Two holed torus with two copies of the CP^2 summand: α and β are a
/// standard pair, γ the two diagonals.
pub fn fig2_example() -> Result<Diagram> {
    let (s, t) = holed_torus_grid();
    let mut d = Diagram::new(Drawing::new(s));
    for (i, (r, c)) in [(2usize, 0usize), (0, 2)].into_iter().enumerate() {
        let (piece, pt) = cp2()?;
        sum_in(&mut d, t.cell[r][c], &piece, free_cell(&pt, 0), &format!("t{i}_"))?;
    }
    for f in Family::ALL {
        let letter = ["a", "b", "d"][f.index()];
        let old = std::mem::take(&mut d.curves[f.index()]);
        for (i, n) in old.iter().enumerate() {
            let new = format!("{letter}{}", i + 1);
            d.drawing.rename_curve(n, &new)?;
            d.curves[f.index()].push(new);
        }
    }
    Ok(d)
}
