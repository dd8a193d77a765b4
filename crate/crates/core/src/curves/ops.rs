//! Surface surgery lifted to drawings, and arcs drawn along region paths.

use std::collections::{BTreeMap, BTreeSet};

use super::cut::CutResult;
use super::{Chord, Curve, Drawing, End, PointId};
use crate::combsurf::{BandTwist, FaceId, Slot};
use crate::error::{Error, Result};

impl Drawing {
    /// Renumbers the sides of one face, keeping points and chords attached.
    fn remap_sides(&mut self, face: FaceId, map: impl Fn(usize) -> usize) {
        let m = |s: Slot| if s.face == face { Slot::new(face, map(s.side)) } else { s };
        self.order = std::mem::take(&mut self.order).into_iter().map(|(k, v)| (m(k), v)).collect();
        for s in self.slot_of.values_mut() {
            *s = m(*s);
        }
        for c in &mut self.curves {
            for ch in c.chords.iter_mut().filter(|ch| ch.face == face) {
                for e in [&mut ch.a, &mut ch.b] {
                    if let End::Point { side, .. } = e {
                        *side = map(*side);
                    }
                }
            }
        }
    }

    /// Removes the disk around a mark; arcs ending there now end on the new
    /// boundary circle.
    pub fn delete_marked_disk(&self, mark: &str) -> Result<Drawing> {
        let face = self.surface.mark_face(mark)?;
        let mut d = self.clone();
        for i in 0..self.surface.sides(face) {
            let s = Slot::new(face, i);
            if let Some(p) = self.surface.partner(s) {
                if self.surface.canonical(s) == s {
                    if let Some(mut list) = d.order.remove(&s) {
                        list.reverse();
                        for q in &list {
                            d.slot_of.insert(*q, p);
                        }
                        d.order.insert(p, list);
                    }
                }
            }
        }
        for c in &mut d.curves {
            if c.chords.first().map(|ch| ch.face) == Some(face) {
                c.chords.remove(0);
            }
            if c.chords.last().map(|ch| ch.face) == Some(face) {
                c.chords.pop();
            }
            if c.chords.iter().any(|ch| ch.face == face) || c.chords.is_empty() {
                return Err(Error::CurveNotSimple(format!("{} runs through the mark {mark}", c.name)));
            }
        }
        d.surface = self.surface.delete_marked_disk(mark)?;
        Ok(d)
    }

    /// Subdivides the interior edge at `s`, leaving its first `keep` points
    /// (along `s`) on the first half. Curves are unchanged up to isotopy.
    pub fn split_edge(&mut self, s: Slot, keep: usize) -> Result<()> {
        let pts = self.points_on(s);
        let keep = keep.min(pts.len());
        let (head, tail) = pts.split_at(keep);
        self.order.remove(&self.surface.canonical(s));
        for q in &pts {
            self.slot_of.remove(q);
        }
        let p = self.surface.partner(s).ok_or_else(|| Error::NotBoundary(self.surface.slot_name(s)))?;
        let (s1, p1) = self.surface.split_edge(s)?;
        self.remap_sides(s.face, |k| if k > s.side { k + 1 } else { k });
        let p_mid = if p.face == s.face && p.side > s.side { p.side + 1 } else { p.side };
        self.remap_sides(p.face, |k| if k > p_mid { k + 1 } else { k });
        let (s2, p2) = (Slot::new(s1.face, s1.side + 1), Slot::new(p1.face, p1.side + 1));
        let head_set: BTreeSet<PointId> = head.iter().copied().collect();
        for c in &mut self.curves {
            for ch in &mut c.chords {
                for e in [&mut ch.a, &mut ch.b] {
                    let End::Point { side, point } = e else { continue };
                    if !pts.contains(point) {
                        continue;
                    }
                    let in_head = head_set.contains(point);
                    if ch.face == s1.face && *side == s1.side && !in_head {
                        *side = s2.side;
                    } else if ch.face == p1.face && *side == p1.side && in_head {
                        *side = p2.side;
                    }
                }
            }
        }
        for (along, other, list) in [(s1, p2, head), (s2, p1, tail)] {
            if list.is_empty() {
                continue;
            }
            let c = if along < other { along } else { other };
            let mut v = list.to_vec();
            if c != along {
                v.reverse();
            }
            for q in &v {
                self.slot_of.insert(*q, c);
            }
            self.order.insert(c, v);
        }
        Ok(())
    }

    /// Splits boundary slot `s` after its first `keep` points.
    pub fn split_boundary_side(&mut self, s: Slot, keep: usize) -> Result<()> {
        self.surface.split_boundary_side(s)?;
        let i = s.side;
        self.remap_sides(s.face, |k| if k > i { k + 1 } else { k });
        let next = Slot::new(s.face, i + 1);
        if let Some(mut list) = self.order.remove(&s) {
            let tail = list.split_off(keep.min(list.len()));
            if !list.is_empty() {
                self.order.insert(s, list);
            }
            if !tail.is_empty() {
                let moved: BTreeSet<PointId> = tail.iter().copied().collect();
                for q in &tail {
                    self.slot_of.insert(*q, next);
                }
                self.order.insert(next, tail);
                for c in &mut self.curves {
                    for ch in c.chords.iter_mut().filter(|ch| ch.face == s.face) {
                        for e in [&mut ch.a, &mut ch.b] {
                            if let End::Point { side, point } = e {
                                if *side == i && moved.contains(point) {
                                    *side = i + 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Splits boundary sides until each carries at most one point.
    pub fn isolate_boundary_points(&mut self) -> Result<()> {
        loop {
            let crowded = self
                .surface
                .boundary_slots()
                .find(|s| self.order.get(s).map(|v| v.len()).unwrap_or(0) > 1);
            match crowded {
                Some(s) => self.split_boundary_side(s, 1)?,
                None => return Ok(()),
            }
        }
    }

    /// Boundary slot carrying the given point.
    pub fn boundary_slot_of(&self, p: PointId) -> Result<Slot> {
        let s = self.slot_of(p);
        if self.surface.is_boundary(s) {
            Ok(s)
        } else {
            Err(Error::NotBoundary(format!("point {p}")))
        }
    }

    pub fn attach_band(&mut self, name: &str, a: Slot, b: Slot) -> Result<FaceId> {
        self.surface.attach_band(name, a, b, BandTwist::Untwisted)
    }

    /// The same drawing on the oppositely oriented surface.
    pub fn mirrored(&self) -> Drawing {
        let surface = self.surface.mirrored();
        let flip = |s: Slot| Slot::new(s.face, self.surface.sides(s.face) - 1 - s.side);
        let mut order = BTreeMap::new();
        let mut slot_of = BTreeMap::new();
        for (c, list) in &self.order {
            let f = flip(*c);
            let key = surface.canonical(f);
            let mut list = list.clone();
            if key == f {
                list.reverse();
            }
            for q in &list {
                slot_of.insert(*q, key);
            }
            order.insert(key, list);
        }
        let flip_end = |face: FaceId, e: End| match e {
            End::Point { side, point } => End::Point { side: self.surface.sides(face) - 1 - side, point },
            End::Mark => End::Mark,
        };
        let curves = self
            .curves
            .iter()
            .map(|c| Curve {
                name: c.name.clone(),
                closed: c.closed,
                chords: c
                    .chords
                    .iter()
                    .map(|ch| Chord { face: ch.face, a: flip_end(ch.face, ch.a), b: flip_end(ch.face, ch.b) })
                    .collect(),
            })
            .collect();
        Drawing { surface, slot_of, order, curves, next_point: self.next_point }
    }

    /// Copies another drawing in as a new component. Faces get `prefix`
    /// prepended; curves are renamed by `rename`.
    pub fn absorb(&mut self, other: &Drawing, prefix: &str, rename: impl Fn(&str) -> String) -> Result<BTreeMap<FaceId, FaceId>> {
        let map = self.surface.absorb(&other.surface, prefix);
        let off = self.next_point;
        let ms = |s: &Slot| Slot::new(map[&s.face], s.side);
        for (c, list) in &other.order {
            self.order.insert(ms(c), list.iter().map(|p| p + off).collect());
        }
        for (p, s) in &other.slot_of {
            self.slot_of.insert(p + off, ms(s));
        }
        self.next_point += other.next_point;
        let shift = |e: End| match e {
            End::Point { side, point } => End::Point { side, point: point + off },
            End::Mark => End::Mark,
        };
        for c in &other.curves {
            let nc = Curve {
                name: rename(&c.name),
                closed: c.closed,
                chords: c.chords.iter().map(|ch| Chord { face: map[&ch.face], a: shift(ch.a), b: shift(ch.b) }).collect(),
            };
            if self.has_curve(&nc.name) {
                return Err(Error::MalformedCurve(nc.name, "duplicate name".into()));
            }
            self.curves.push(nc);
        }
        Ok(map)
    }

    /// Connected sum along two faces that no curve touches.
    pub fn sum_along_faces(&mut self, f1: FaceId, f2: FaceId) -> Result<()> {
        for f in [f1, f2] {
            let busy = (0..self.surface.sides(f)).any(|i| !self.points_on(Slot::new(f, i)).is_empty())
                || self.curves.iter().any(|c| c.chords.iter().any(|ch| ch.face == f));
            if busy {
                return Err(Error::Precondition(format!("face {} carries curves", self.surface.face(f).name)));
            }
        }
        self.surface.sum_along_faces(f1, f2)
    }

    /// Local index just after the anchor of a gap (0 if the gap is first).
    fn gap_index(&self, cut: &CutResult, slot: Slot, gap: usize) -> usize {
        match cut.gap_anchor(slot, gap) {
            Some(a) => self.local_index(slot, a) + 1,
            None => 0,
        }
    }

    /// Draws an arc along a path produced by [`Drawing::region_path`].
    pub fn draw_arc_along(&mut self, name: &str, cut: &CutResult, path: &[(Slot, usize)]) -> Result<()> {
        if path.len() < 2 || path.len() % 2 != 0 {
            return Err(Error::Precondition("malformed region path".into()));
        }
        let mut pts = Vec::new();
        for (k, (slot, gap)) in path.iter().enumerate() {
            // interior crossings appear twice (exit, then entry); insert on the exit only
            if k == 0 || k == path.len() - 1 || k % 2 == 1 {
                let at = self.gap_index(cut, *slot, *gap);
                pts.push(self.insert_point(*slot, at));
            }
        }
        let mut chords = Vec::new();
        for (k, pair) in path.chunks(2).enumerate() {
            let (from, to) = (pair[0].0, pair[1].0);
            chords.push(Chord {
                face: from.face,
                a: End::Point { side: from.side, point: pts[k] },
                b: End::Point { side: to.side, point: pts[k + 1] },
            });
        }
        self.add_curve(Curve { name: name.into(), closed: false, chords })
    }

    /// Draws an arc between two boundary circles avoiding the named curves.
    pub fn draw_arc_avoiding(&mut self, name: &str, avoid: &[String], from: &[Slot], to: &[Slot]) -> Result<()> {
        let idx: Vec<usize> = avoid
            .iter()
            .map(|n| self.curves.iter().position(|c| &c.name == n).ok_or_else(|| Error::MalformedCurve(n.clone(), "no such curve".into())))
            .collect::<Result<_>>()?;
        let cut = self.refine(&idx, true)?;
        let from: BTreeSet<Slot> = from.iter().copied().collect();
        let to: BTreeSet<Slot> = to.iter().copied().collect();
        let path = Drawing::region_path(&cut, &self.surface, &from, &to)
            .ok_or_else(|| Error::GuideObstructed(format!("no arc for {name} avoids the given curves")))?;
        self.draw_arc_along(name, &cut, &path)
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog::construct::unknotted_rp2_shadow;

    #[test]
    fn split_every_edge() {
        let (d, _) = unknotted_rp2_shadow().unwrap();
        let before = d.validate_shadow().params;
        let edges = d.drawing.surface().edges();
        for (i, e) in edges.into_iter().enumerate() {
            let mut x = d.clone();
            let n = x.drawing.points_on(e).len();
            x.drawing.split_edge(e, i % (n + 1)).unwrap();
            for c in x.drawing.curves() {
                x.drawing.check_curve(c).unwrap();
            }
            x.drawing.surface().validate().unwrap();
            assert_eq!(x.validate_shadow().params, before);
            assert_eq!(x.drawing.surface().euler_characteristic(), d.drawing.surface().euler_characteristic());
        }
    }
}
