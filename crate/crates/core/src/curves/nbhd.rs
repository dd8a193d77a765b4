//! Curves built around arcs: boundaries of regular neighbourhoods and band
//! core closures.

use super::{Chord, Curve, Drawing, End, PointId};
use crate::combsurf::{FaceId, Slot};
use crate::error::{Error, Result};

impl Drawing {
    /// Arc chords outside mark faces, plus the hole side at each end.
    fn arc_core(&self, arc: &Curve, include_end_holes: bool) -> Result<(Vec<Chord>, Slot, Slot, Option<FaceId>, Option<FaceId>)> {
        if arc.closed {
            return Err(Error::MalformedCurve(arc.name.clone(), "not an arc".into()));
        }
        let mut chords = arc.chords.clone();
        let mut marks = [None, None];
        if chords[0].a == End::Mark {
            marks[0] = Some(chords.remove(0).face);
        }
        if chords.last().map(|c| c.b) == Some(End::Mark) {
            marks[1] = Some(chords.pop().expect("nonempty").face);
        }
        let marked = marks.iter().filter(|m| m.is_some()).count();
        if (include_end_holes && marked > 0) || (!include_end_holes && marked < 2) || chords.is_empty() {
            return Err(Error::EndpointsNotHoles);
        }
        let side_of = |face: FaceId, e: End| match e {
            End::Point { side, .. } => Slot::new(face, side),
            End::Mark => unreachable!("marks were trimmed"),
        };
        let first = chords[0];
        let last = *chords.last().expect("nonempty");
        let (s0, s1) = (side_of(first.face, first.a), side_of(last.face, last.b));
        Ok((chords, s0, s1, marks[0], marks[1]))
    }

    /// Crossings of a walk once around a hole, starting at hole side `start`
    /// and keeping the hole on the right. Each crossing sits nearest the hole.
    fn hug(&mut self, start: Slot, hole: &dyn Fn(&Drawing, Slot) -> bool) -> Result<Vec<(Slot, PointId)>> {
        let s = &self.surface;
        let limit = s.slots().count() + 1;
        let mut out = Vec::new();
        let mut cur = start;
        for _ in 0..limit {
            let c = self.surface.next_side(cur);
            if hole(self, c) {
                if c == start {
                    return Ok(out);
                }
                cur = c;
                continue;
            }
            let p = self.surface.partner(c).ok_or_else(|| Error::MalformedSurface("hole walk reached another boundary".into()))?;
            let id = self.insert_point(c, 0);
            out.push((c, id));
            cur = p;
        }
        Err(Error::MalformedSurface("hole walk did not close up".into()))
    }

    /// Boundary of a regular neighbourhood of an arc together with the holes
    /// at its ends (or, with `include_end_holes` false, the marks at its ends).
    /// The result is added as a closed curve named `name`.
    pub fn regular_neighborhood_boundary(&mut self, arc: &str, name: &str, include_end_holes: bool) -> Result<()> {
        let a = self.curve(arc)?.clone();
        let (chords, s_start, s_end, m0, m1) = self.arc_core(&a, include_end_holes)?;
        let hole_of = |d: &Drawing, slot: Slot, mark: Option<FaceId>| -> bool {
            match mark {
                Some(m) => d.surface.partner(slot).map(|p| p.face) == Some(m),
                None => d.surface.is_boundary(slot),
            }
        };
        let mut exits: Vec<(Slot, PointId)> = Vec::new();
        // left copy, forwards
        for ch in &chords[..chords.len() - 1] {
            let End::Point { side, point } = ch.b else { unreachable!() };
            let slot = Slot::new(ch.face, side);
            let at = self.local_index(slot, point) + 1;
            exits.push((slot, self.insert_point(slot, at)));
        }
        exits.extend(self.hug(s_end, &|d, s| hole_of(d, s, m1))?);
        // right copy, backwards
        for ch in chords[1..].iter().rev() {
            let End::Point { side, point } = ch.a else { unreachable!() };
            let slot = Slot::new(ch.face, side);
            let at = self.local_index(slot, point) + 1;
            exits.push((slot, self.insert_point(slot, at)));
        }
        exits.extend(self.hug(s_start, &|d, s| hole_of(d, s, m0))?);
        if exits.is_empty() {
            return Err(Error::MalformedSurface(format!("neighbourhood of {arc} meets no edge")));
        }
        let curve = self.closed_from_exits(name, &exits)?;
        self.add_curve(curve)
    }

    /// Closed curve through the given exits (slot left, point on it).
    pub(crate) fn closed_from_exits(&self, name: &str, exits: &[(Slot, PointId)]) -> Result<Curve> {
        let n = exits.len();
        let mut chords = Vec::with_capacity(n);
        for k in 0..n {
            let (prev, pp) = exits[(k + n - 1) % n];
            let (exit, p) = exits[k];
            let entry = self.surface.partner(prev).ok_or_else(|| Error::NotBoundary(self.surface.slot_name(prev)))?;
            if entry.face != exit.face {
                return Err(Error::MalformedCurve(name.into(), format!("crossing {k} does not follow the previous one")));
            }
            chords.push(Chord { face: exit.face, a: End::Point { side: entry.side, point: pp }, b: End::Point { side: exit.side, point: p } });
        }
        Ok(Curve { name: name.into(), closed: true, chords })
    }

    /// Closed curve parallel to the boundary circle through `boundary`, running
    /// the way the boundary orientation does.
    pub fn boundary_parallel(&mut self, boundary: Slot, name: &str) -> Result<()> {
        let circle: std::collections::BTreeSet<Slot> = self
            .surface
            .boundary_circles()
            .into_iter()
            .find(|c| c.contains(&boundary))
            .ok_or_else(|| Error::NotBoundary(self.surface.slot_name(boundary)))?
            .into_iter()
            .collect();
        let exits = self.hug(boundary, &|_, s| circle.contains(&s))?;
        let c = self.closed_from_exits(name, &exits)?;
        self.add_curve(c)
    }

    /// Replaces an arc whose ends sit on the feet of `band` by the closed curve
    /// running along the arc and back through the band's core.
    pub fn band_core_closure(&mut self, arc: &str, band: FaceId, name: &str) -> Result<()> {
        let a = self.curve(arc)?.clone();
        let (chords, s_start, s_end, _, _) = self.arc_core(&a, true)?;
        if chords.len() != a.chords.len() {
            return Err(Error::EndpointsNotHoles);
        }
        let foot = |k: usize| self.surface.partner(Slot::new(band, k));
        let (f0, f2) = (foot(0), foot(2));
        let (in_side, out_side) = if f0 == Some(s_end) && f2 == Some(s_start) {
            (0, 2)
        } else if f2 == Some(s_end) && f0 == Some(s_start) {
            (2, 0)
        } else {
            return Err(Error::BandNotIncident);
        };
        let (End::Point { point: pe, .. }, End::Point { point: ps, .. }) = (chords.last().expect("nonempty").b, chords[0].a) else {
            unreachable!()
        };
        let mut all = chords;
        all.push(Chord { face: band, a: End::Point { side: in_side, point: pe }, b: End::Point { side: out_side, point: ps } });
        let idx = self.curves.iter().position(|c| c.name == arc).expect("present");
        self.curves.remove(idx);
        let curve = Curve { name: name.into(), closed: true, chords: all };
        if let Err(e) = self.add_curve(curve) {
            self.curves.insert(idx, a);
            return Err(e);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::{SphereBelt, RIGHT};
    use crate::curves::{ArcEnd, DrawingBuilder};

    fn four_marks() -> Drawing {
        let sb = SphereBelt::new(&["M1", "E1", "M2", "E2", "M3", "E3", "M4", "E4"]);
        let mut b = DrawingBuilder::new(sb.surface.clone());
        b.arc("a", ArcEnd::Mark(sb.cell("M1")), &[(sb.side("M1", RIGHT), 0), (sb.side("E1", RIGHT), 0)], ArcEnd::Mark(sb.cell("M2")))
            .unwrap();
        let mut d = b.finish().unwrap();
        for m in ["M1", "M2", "M3", "M4"] {
            d = d.delete_marked_disk(m).unwrap();
        }
        d
    }

    #[test]
    fn encircling_curve_separates_pairs_of_holes() {
        let mut d = four_marks();
        assert_eq!(d.surface().euler_characteristic(), -2);
        let a = d.curve("a").unwrap().clone();
        d.regular_neighborhood_boundary("a", "n", true).unwrap();
        let n = d.curve("n").unwrap();
        assert_eq!(d.geometric_crossings(n, &a), 0);
        let cut = d.cut_along_system(&["n".into()]).unwrap().surface;
        let parts = cut.classify_components();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.genus == 0 && p.boundary_count == 3));
        // arc crossing one interior edge: 2 copies + hugs
        assert!(n.chords.len() >= 2);
    }

    #[test]
    fn closure_through_band_is_nonseparating() {
        let mut d = four_marks();
        d.regular_neighborhood_boundary("a", "n", true).unwrap();
        d.isolate_boundary_points().unwrap();
        let a = d.curve("a").unwrap().clone();
        let (s0, s1) = (d.boundary_slot_of(a.points().next().unwrap()).unwrap(), d.boundary_slot_of(a.points().last().unwrap()).unwrap());
        let band = d.attach_band("band", s0, s1).unwrap();
        d.surface().validate().unwrap();
        let k = d.surface().classify();
        assert_eq!((k.genus, k.boundary_count), (1, 3));
        d.band_core_closure("a", band, "c").unwrap();
        assert!(!d.has_curve("a"));
        let (c, n) = (d.curve("c").unwrap(), d.curve("n").unwrap());
        assert_eq!(d.geometric_crossings(c, n), 0);
        let cut = d.cut_along_system(&["c".into()]).unwrap().surface;
        assert_eq!(cut.classify().components, 1);
        assert_eq!(d.band_core_closure("n", band, "x"), Err(Error::MalformedCurve("n".into(), "not an arc".into())));
    }

    #[test]
    fn marked_ends_need_the_other_mode() {
        let sb = SphereBelt::new(&["M1", "E1", "M2", "E2"]);
        let mut b = DrawingBuilder::new(sb.surface.clone());
        b.arc("a", ArcEnd::Mark(sb.cell("M1")), &[(sb.side("M1", RIGHT), 0), (sb.side("E1", RIGHT), 0)], ArcEnd::Mark(sb.cell("M2")))
            .unwrap();
        let mut d = b.finish().unwrap();
        assert_eq!(d.regular_neighborhood_boundary("a", "n", true), Err(Error::EndpointsNotHoles));
        d.regular_neighborhood_boundary("a", "n", false).unwrap();
        assert_eq!(d.geometric_crossings(d.curve("n").unwrap(), d.curve("a").unwrap()), 0);
    }
}
