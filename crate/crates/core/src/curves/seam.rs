//! Gluing drawings along boundary slots and closing arcs into curves.

use super::{Chord, Curve, Drawing, End, PointId};
use crate::combsurf::Slot;
use crate::error::{Error, Result};

impl Drawing {
    pub fn set_label(&mut self, slot: Slot, label: impl Into<String>) {
        self.surface.set_label(slot, label);
    }

    /// Puts the points of a boundary slot in the given order along it.
    pub fn reorder_boundary_points(&mut self, s: Slot, order: Vec<PointId>) -> Result<()> {
        if !self.surface.is_boundary(s) {
            return Err(Error::NotBoundary(self.surface.slot_name(s)));
        }
        let mut have = self.order.get(&s).cloned().unwrap_or_default();
        let mut want = order.clone();
        have.sort();
        want.sort();
        if have != want {
            return Err(Error::Precondition(format!("reordering changes the points on {}", self.surface.slot_name(s))));
        }
        if !order.is_empty() {
            self.order.insert(s, order);
        }
        Ok(())
    }

    /// Glues two boundary slots. The k-th point along `x` is identified with
    /// the k-th point from the end along `y`; returns the identified pairs.
    pub fn glue_boundary(&mut self, x: Slot, y: Slot) -> Result<Vec<(PointId, PointId)>> {
        for s in [x, y] {
            if !self.surface.is_boundary(s) {
                return Err(Error::NotBoundary(self.surface.slot_name(s)));
            }
        }
        let xs = self.order.remove(&x).unwrap_or_default();
        let ys = self.order.remove(&y).unwrap_or_default();
        if xs.len() != ys.len() {
            self.order.insert(x, xs);
            self.order.insert(y, ys);
            return Err(Error::Precondition("glued sides carry different numbers of points".into()));
        }
        self.surface.glue(x, y)?;
        let n = xs.len();
        let pairs: Vec<(PointId, PointId)> = (0..n).map(|k| (xs[k], ys[n - 1 - k])).collect();
        let merge: std::collections::BTreeMap<PointId, PointId> = pairs.iter().map(|(p, q)| (*q, *p)).collect();
        for q in merge.keys() {
            self.slot_of.remove(q);
        }
        for c in &mut self.curves {
            for ch in &mut c.chords {
                for e in [&mut ch.a, &mut ch.b] {
                    if let End::Point { point, .. } = e {
                        if let Some(p) = merge.get(point) {
                            *point = *p;
                        }
                    }
                }
            }
        }
        let canon = self.surface.canonical(x);
        let mut list = xs;
        if canon != x {
            list.reverse();
        }
        for p in &list {
            self.slot_of.insert(*p, canon);
        }
        if !list.is_empty() {
            self.order.insert(canon, list);
        }
        Ok(pairs)
    }

    /// Replaces arcs `a` and `b`, which share both endpoints, by the closed
    /// curve running along `a` and back along `b`.
    pub fn join_arcs(&mut self, a: &str, b: &str, name: &str) -> Result<()> {
        let ca = self.curve(a)?.clone();
        let cb = self.curve(b)?.clone();
        if ca.closed || cb.closed {
            return Err(Error::MalformedCurve(name.into(), "joining closed curves".into()));
        }
        let ends = |c: &Curve| (c.chords[0].a.point(), c.chords.last().expect("arc").b.point());
        if ends(&ca) != ends(&cb) {
            return Err(Error::MalformedCurve(name.into(), format!("{a} and {b} do not share endpoints")));
        }
        let mut chords = ca.chords.clone();
        chords.extend(cb.chords.iter().rev().map(|ch| Chord { face: ch.face, a: ch.b, b: ch.a }));
        let ia = self.curves.iter().position(|c| c.name == a).expect("present");
        self.curves.remove(ia);
        let ib = self.curves.iter().position(|c| c.name == b).expect("present");
        self.curves.remove(ib);
        self.add_curve(Curve { name: name.into(), closed: true, chords })
    }
}
