//! Placing a region path's crossings so the resulting arc is simple.

use super::cut::CutResult;
use super::{Chord, Curve, Drawing, End, PointId};
use crate::combsurf::Slot;
use crate::error::{Error, Result};

impl Drawing {
    /// Local index range of a gap between obstacle points.
    fn gap_range(&self, cut: &CutResult, slot: Slot, gap: usize) -> (usize, usize) {
        let lo = match cut.gap_anchor(slot, gap) {
            Some(a) => self.local_index(slot, a) + 1,
            None => 0,
        };
        let hi = if gap < cut.obstacle_count(slot) {
            let b = cut.gap_anchor(slot, gap + 1).expect("obstacle after the gap");
            self.local_index(slot, b)
        } else {
            self.points_on(slot).len()
        };
        (lo, hi)
    }

    /// Like `draw_arc_along`, but when the path passes a gap more than once
    /// the passes are stacked so that the arc does not cross itself.
    pub fn draw_simple_arc_along(&mut self, name: &str, cut: &CutResult, path: &[(Slot, usize)]) -> Result<()> {
        if path.len() < 2 || path.len() % 2 != 0 {
            return Err(Error::Precondition("malformed region path".into()));
        }
        let passes: Vec<(Slot, usize)> =
            path.iter().enumerate().filter(|(k, _)| *k == 0 || *k == path.len() - 1 || k % 2 == 1).map(|(_, x)| *x).collect();
        let faces: Vec<Slot> = path.chunks(2).map(|p| p[0].0).collect();
        let ends: Vec<Slot> = path.chunks(2).map(|p| p[1].0).collect();
        let mut pts: Vec<PointId> = Vec::new();
        let mut budget = 1usize << 16;
        if !self.arrange(cut, &passes, &faces, &ends, &mut pts, &mut budget) {
            return Err(Error::CurveNotSimple(format!("{name}: no simple arrangement of its path")));
        }
        let chords = (0..faces.len())
            .map(|k| Chord {
                face: faces[k].face,
                a: End::Point { side: faces[k].side, point: pts[k] },
                b: End::Point { side: ends[k].side, point: pts[k + 1] },
            })
            .collect();
        let curve = Curve { name: name.into(), closed: false, chords };
        if let Err(e) = self.add_curve(curve) {
            for p in pts {
                self.remove_point(p);
            }
            return Err(e);
        }
        Ok(())
    }

    fn arrange(
        &mut self,
        cut: &CutResult,
        passes: &[(Slot, usize)],
        faces: &[Slot],
        ends: &[Slot],
        pts: &mut Vec<PointId>,
        budget: &mut usize,
    ) -> bool {
        let t = pts.len();
        if t == passes.len() {
            return true;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let (slot, gap) = passes[t];
        let (lo, hi) = self.gap_range(cut, slot, gap);
        let mine: Vec<usize> = pts
            .iter()
            .filter(|p| self.surface.canonical(self.slot_of(**p)) == self.surface.canonical(slot))
            .map(|p| self.local_index(slot, *p))
            .filter(|i| *i >= lo && *i < hi)
            .collect();
        let choices: Vec<usize> = match (mine.iter().min(), mine.iter().max()) {
            (Some(a), Some(b)) => vec![*a, *b + 1],
            _ => vec![lo],
        };
        for at in choices {
            let p = self.insert_point(slot, at);
            pts.push(p);
            let ok = t == 0 || {
                let k = t - 1;
                let chord = |j: usize| Chord {
                    face: faces[j].face,
                    a: End::Point { side: faces[j].side, point: pts[j] },
                    b: End::Point { side: ends[j].side, point: pts[j + 1] },
                };
                let new = chord(k);
                (0..k).all(|j| faces[j].face != new.face || !self.chords_cross(&chord(j), &new))
            };
            if ok && self.arrange(cut, passes, faces, ends, pts, budget) {
                return true;
            }
            pts.pop();
            self.remove_point(p);
        }
        false
    }
}
