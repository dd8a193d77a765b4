use std::collections::BTreeMap;

use super::{Chord, Curve, Drawing, End, PointId};
use crate::combsurf::{CombSurface, FaceId, Slot};
use crate::error::{Error, Result};

/// Where an arc starts or stops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcEnd {
    /// the mark at the centre of this face
    Mark(FaceId),
    /// a point on a boundary slot
    Boundary { slot: Slot, lane: i64 },
}

/// Lays out curves by listing the slots they exit through. Each crossing gets a
/// lane: an integer key read along the exit slot; points on one edge are
/// ordered by lane once [`DrawingBuilder::finish`] runs.
pub struct DrawingBuilder {
    drawing: Drawing,
    keys: BTreeMap<PointId, i64>,
    pending: Vec<Curve>,
}

impl DrawingBuilder {
    pub fn new(surface: CombSurface) -> Self {
        DrawingBuilder { drawing: Drawing::new(surface), keys: BTreeMap::new(), pending: Vec::new() }
    }

    pub fn surface(&self) -> &CombSurface {
        &self.drawing.surface
    }

    fn point(&mut self, s: Slot, lane: i64) -> PointId {
        let c = self.drawing.surface.canonical(s);
        let id = self.drawing.next_point;
        self.drawing.next_point += 1;
        self.drawing.slot_of.insert(id, c);
        self.drawing.order.entry(c).or_default().push(id);
        self.keys.insert(id, if c == s { lane } else { -lane });
        id
    }

    fn entry_of(&self, name: &str, exit: Slot) -> Result<Slot> {
        self.drawing
            .surface
            .partner(exit)
            .ok_or_else(|| Error::MalformedCurve(name.to_string(), format!("exit {exit} is a boundary slot")))
    }

    /// A closed curve crossing the given slots in order (each slot is read from
    /// the face being left).
    pub fn closed(&mut self, name: &str, exits: &[(Slot, i64)]) -> Result<()> {
        if exits.is_empty() {
            return Err(Error::MalformedCurve(name.into(), "a closed curve must cross an edge".into()));
        }
        let pts: Vec<PointId> = exits.iter().map(|(s, l)| self.point(*s, *l)).collect();
        let n = exits.len();
        let mut chords = Vec::with_capacity(n);
        for k in 0..n {
            let prev = (k + n - 1) % n;
            let entry = self.entry_of(name, exits[prev].0)?;
            let exit = exits[k].0;
            if entry.face != exit.face {
                return Err(Error::MalformedCurve(name.into(), format!("crossing {k} leaves a face it never entered")));
            }
            chords.push(Chord {
                face: exit.face,
                a: End::Point { side: entry.side, point: pts[prev] },
                b: End::Point { side: exit.side, point: pts[k] },
            });
        }
        self.pending.push(Curve { name: name.into(), closed: true, chords });
        Ok(())
    }

    /// An arc from `start` through the given exits to `end`.
    pub fn arc(&mut self, name: &str, start: ArcEnd, exits: &[(Slot, i64)], end: ArcEnd) -> Result<()> {
        let mut chords = Vec::new();
        let (mut face, mut a) = self.end(start);
        for (k, (exit, lane)) in exits.iter().enumerate() {
            if exit.face != face {
                return Err(Error::MalformedCurve(name.into(), format!("crossing {k} leaves a face it never entered")));
            }
            let p = self.point(*exit, *lane);
            chords.push(Chord { face, a, b: End::Point { side: exit.side, point: p } });
            let entry = self.entry_of(name, *exit)?;
            face = entry.face;
            a = End::Point { side: entry.side, point: p };
        }
        let (end_face, b) = self.end(end);
        if end_face != face {
            return Err(Error::MalformedCurve(name.into(), "arc does not reach its end face".into()));
        }
        chords.push(Chord { face, a, b });
        self.pending.push(Curve { name: name.into(), closed: false, chords });
        Ok(())
    }

    fn end(&mut self, e: ArcEnd) -> (FaceId, End) {
        match e {
            ArcEnd::Mark(f) => (f, End::Mark),
            ArcEnd::Boundary { slot, lane } => {
                let p = self.point(slot, lane);
                (slot.face, End::Point { side: slot.side, point: p })
            }
        }
    }

    pub fn finish(mut self) -> Result<Drawing> {
        for (slot, list) in self.drawing.order.iter_mut() {
            list.sort_by_key(|p| self.keys.get(p).copied().unwrap_or(i64::MIN));
            for w in list.windows(2) {
                if let (Some(a), Some(b)) = (self.keys.get(&w[0]), self.keys.get(&w[1])) {
                    if a == b {
                        return Err(Error::MalformedSurface(format!("two crossings share lane {a} on edge {slot}")));
                    }
                }
            }
        }
        for c in std::mem::take(&mut self.pending) {
            self.drawing.add_curve(c)?;
        }
        Ok(self.drawing)
    }
}
