//! Fundamental group presentations read off the dual graph of the surface.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::combsurf::Slot;
use crate::curves::{Drawing, End};
use crate::diagrams::{Diagram, Family, Params};
use crate::error::{Error, Result};

use super::group::{GroupPresentation, Word};

/// Generators are the interior edges off a spanning tree of the dual graph;
/// relators are the links of interior vertices.
struct DualBasis {
    gens: BTreeMap<Slot, usize>,
    count: usize,
}

impl DualBasis {
    fn new(dr: &Drawing) -> Self {
        let s = dr.surface();
        let mut tree = BTreeSet::new();
        let mut seen = BTreeSet::new();
        for root in s.face_ids() {
            if !seen.insert(root) {
                continue;
            }
            let mut queue = VecDeque::from([root]);
            while let Some(f) = queue.pop_front() {
                for side in 0..s.sides(f) {
                    let sl = Slot::new(f, side);
                    let Some(p) = s.partner(sl) else { continue };
                    if seen.insert(p.face) {
                        tree.insert(s.canonical(sl));
                        queue.push_back(p.face);
                    }
                }
            }
        }
        let mut gens = BTreeMap::new();
        for e in dr.edge_list(true) {
            if !tree.contains(&e) {
                let n = gens.len();
                gens.insert(e, n);
            }
        }
        let count = gens.len();
        DualBasis { gens, count }
    }

    fn letter(&self, dr: &Drawing, exit: Slot, w: &mut Word) {
        let canon = dr.surface().canonical(exit);
        if let Some(g) = self.gens.get(&canon) {
            w.push((*g, if canon == exit { 1 } else { -1 }));
        }
    }

    fn vertex_links(&self, dr: &Drawing) -> Vec<Word> {
        let s = dr.surface();
        let verts = s.vertices();
        let boundary = dr.boundary_vertices();
        let mut done = BTreeSet::new();
        let mut out = Vec::new();
        for (corner, v) in &verts.of_corner {
            if boundary.contains(v) || !done.insert(*v) {
                continue;
            }
            let mut w = Word::new();
            let mut c = *corner;
            loop {
                self.letter(dr, c, &mut w);
                let p = s.partner(c).expect("interior vertex");
                c = Slot::new(p.face, (p.side + 1) % s.sides(p.face));
                if c == *corner {
                    break;
                }
            }
            out.push(w);
        }
        out
    }
}

/// Presentation of π1 of the surface modulo all curves of the diagram: the
/// 4-manifold's group for closed diagrams, the spine group for relative ones.
pub fn pi1_presentation(d: &Diagram) -> Result<GroupPresentation> {
    match d.validate().params {
        Some(Params::Closed { .. }) | Some(Params::Relative { .. }) => {}
        _ => return Err(Error::NotValidated),
    }
    let dr = &d.drawing;
    let basis = DualBasis::new(dr);
    let mut relators = basis.vertex_links(dr);
    for f in Family::ALL {
        for n in d.family(f) {
            let c = dr.curve(n)?;
            let mut w = Word::new();
            for ch in &c.chords {
                if let End::Point { side, .. } = ch.b {
                    basis.letter(dr, Slot::new(ch.face, side), &mut w);
                }
            }
            relators.push(w);
        }
    }
    let gens = (0..basis.count).map(|i| format!("x{i}")).collect();
    let mut p = GroupPresentation::new(gens, relators);
    p.simplify(200);
    Ok(p)
}
