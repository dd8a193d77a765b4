//! Curves and arcs drawn on a combinatorial surface in normal position.
//!
//! A [`Drawing`] owns a surface, the points where curves cross its edges, and
//! the curves themselves. Each edge keeps its points in a total order (read in
//! the direction of the edge's canonical slot); whether two chords of a face
//! cross is decided purely by interleaving of those positions.

mod arrange;
mod build;
mod cut;
mod homology;
mod nbhd;
mod ops;
mod seam;
mod slide;
mod track;

use std::collections::BTreeMap;

pub use build::{ArcEnd, DrawingBuilder};
pub use cut::{CutResult, Region, SubSide};
pub use homology::{Cochain, CohomologyFrame};
pub use slide::Guide;
pub use track::{ClassTracker, Quotient};

use crate::combsurf::{CombSurface, FaceId, Slot};
use crate::error::{Error, Result};

pub type PointId = usize;

/// End of a chord: a point on one side of the chord's face, or the mark at
/// the centre of a mark face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Point { side: usize, point: PointId },
    Mark,
}

impl End {
    pub fn point(&self) -> Option<PointId> {
        match self {
            End::Point { point, .. } => Some(*point),
            End::Mark => None,
        }
    }
}

/// A segment of a curve inside one face, directed from `a` to `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Chord {
    pub face: FaceId,
    pub a: End,
    pub b: End,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Curve {
    pub name: String,
    pub closed: bool,
    pub chords: Vec<Chord>,
}

impl Curve {
    pub fn points(&self) -> impl Iterator<Item = PointId> + '_ {
        let skip = usize::from(self.closed);
        self.chords.iter().enumerate().flat_map(move |(i, c)| {
            let a = if i == 0 && skip == 0 { c.a.point() } else { None };
            a.into_iter().chain(c.b.point())
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Drawing {
    surface: CombSurface,
    /// canonical slot of each point
    slot_of: BTreeMap<PointId, Slot>,
    /// points of each edge, ordered along its canonical slot
    order: BTreeMap<Slot, Vec<PointId>>,
    curves: Vec<Curve>,
    next_point: PointId,
}

impl Drawing {
    pub fn new(surface: CombSurface) -> Self {
        Drawing { surface, ..Default::default() }
    }

    pub fn surface(&self) -> &CombSurface {
        &self.surface
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn curve(&self, name: &str) -> Result<&Curve> {
        self.curves
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::MalformedCurve(name.to_string(), "no such curve".into()))
    }

    pub fn has_curve(&self, name: &str) -> bool {
        self.curves.iter().any(|c| c.name == name)
    }

    pub fn slot_of(&self, p: PointId) -> Slot {
        self.slot_of[&p]
    }

    /// Points on the edge of `s`, ordered along `s` itself.
    pub fn points_on(&self, s: Slot) -> Vec<PointId> {
        let c = self.surface.canonical(s);
        let mut v = self.order.get(&c).cloned().unwrap_or_default();
        if c != s {
            v.reverse();
        }
        v
    }

    /// Position of `p` along slot `s` (0 is nearest the start corner of `s`).
    pub fn local_index(&self, s: Slot, p: PointId) -> usize {
        let c = self.surface.canonical(s);
        let list = &self.order[&c];
        let i = list.iter().position(|q| *q == p).expect("point lies on this edge");
        if c == s {
            i
        } else {
            list.len() - 1 - i
        }
    }

    /// Inserts a new point on slot `s` so that it ends up at local index `at`.
    pub fn insert_point(&mut self, s: Slot, at: usize) -> PointId {
        let c = self.surface.canonical(s);
        let id = self.next_point;
        self.next_point += 1;
        let list = self.order.entry(c).or_default();
        assert!(at <= list.len(), "insert position out of range");
        let idx = if c == s { at } else { list.len() - at };
        list.insert(idx, id);
        self.slot_of.insert(id, c);
        id
    }

    fn remove_point(&mut self, p: PointId) {
        if let Some(c) = self.slot_of.remove(&p) {
            if let Some(list) = self.order.get_mut(&c) {
                list.retain(|q| *q != p);
                if list.is_empty() {
                    self.order.remove(&c);
                }
            }
        }
    }

    pub fn add_curve(&mut self, curve: Curve) -> Result<()> {
        if self.has_curve(&curve.name) {
            return Err(Error::MalformedCurve(curve.name.clone(), "duplicate name".into()));
        }
        self.check_curve(&curve)?;
        self.curves.push(curve);
        Ok(())
    }

    /// Removes a curve together with the points only it used.
    pub fn remove_curve(&mut self, name: &str) -> Result<Curve> {
        let i = self
            .curves
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::MalformedCurve(name.to_string(), "no such curve".into()))?;
        let c = self.curves.remove(i);
        let pts: Vec<PointId> = c.points().collect();
        for p in pts {
            if !self.curves.iter().any(|o| o.points().any(|q| q == p)) {
                self.remove_point(p);
            }
        }
        Ok(c)
    }

    pub fn rename_curve(&mut self, old: &str, new: &str) -> Result<()> {
        if self.has_curve(new) {
            return Err(Error::MalformedCurve(new.to_string(), "duplicate name".into()));
        }
        let c = self
            .curves
            .iter_mut()
            .find(|c| c.name == old)
            .ok_or_else(|| Error::MalformedCurve(old.to_string(), "no such curve".into()))?;
        c.name = new.to_string();
        Ok(())
    }

    /// Cyclic coordinate of a chord end around its face boundary.
    fn coord(&self, face: FaceId, e: End) -> Option<(usize, usize)> {
        match e {
            End::Point { side, point } => Some((side, self.local_index(Slot::new(face, side), point))),
            End::Mark => None,
        }
    }

    /// Whether `y`'s endpoints separate `x`'s around their common face.
    pub fn chords_cross(&self, x: &Chord, y: &Chord) -> bool {
        self.crossing_sign(x, y) != 0
    }

    /// +1 when `y` passes from the right of `x` to its left, -1 for the reverse,
    /// 0 when they do not cross.
    pub fn crossing_sign(&self, x: &Chord, y: &Chord) -> i32 {
        if x.face != y.face {
            return 0;
        }
        let (Some(p), Some(q), Some(r), Some(s)) =
            (self.coord(x.face, x.a), self.coord(x.face, x.b), self.coord(y.face, y.a), self.coord(y.face, y.b))
        else {
            return 0;
        };
        if p == r || p == s || q == r || q == s {
            return 0;
        }
        // strictly inside the ccw arc from p to q (the right side of x)
        let inside = |t| if p < q { p < t && t < q } else { t > p || t < q };
        match (inside(r), inside(s)) {
            (true, false) => 1,
            (false, true) => -1,
            _ => 0,
        }
    }

    pub fn geometric_crossings(&self, c1: &Curve, c2: &Curve) -> usize {
        let mut n = 0;
        for x in &c1.chords {
            for y in &c2.chords {
                if self.chords_cross(x, y) {
                    n += 1;
                }
            }
        }
        n
    }

    /// Signed intersection number, positive when `c2` crosses `c1` from right to left.
    pub fn algebraic_intersection(&self, c1: &Curve, c2: &Curve) -> i64 {
        let mut n = 0i64;
        for x in &c1.chords {
            for y in &c2.chords {
                n += self.crossing_sign(x, y) as i64;
            }
        }
        n
    }

    pub fn self_crossings(&self, c: &Curve) -> usize {
        let mut n = 0;
        for (i, x) in c.chords.iter().enumerate() {
            for y in &c.chords[i + 1..] {
                if self.chords_cross(x, y) {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn by_names(&self, names: &[String]) -> Result<Vec<&Curve>> {
        names.iter().map(|n| self.curve(n)).collect()
    }

    /// Structural check of a curve: connected chords, points used consistently,
    /// marks only inside mark faces, no self-crossings.
    pub fn check_curve(&self, c: &Curve) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedCurve(c.name.clone(), msg));
        if c.chords.is_empty() {
            return bad("no chords".into());
        }
        let s = &self.surface;
        for (i, ch) in c.chords.iter().enumerate() {
            if !s.has_face(ch.face) {
                return bad(format!("chord {i} lies in a missing face"));
            }
            let is_mark_face = s.mark_of_face(ch.face).is_some();
            for e in [ch.a, ch.b] {
                match e {
                    End::Mark if !is_mark_face => return bad(format!("chord {i} ends at a mark in an unmarked face")),
                    End::Point { side, point } => {
                        let slot = Slot::new(ch.face, side);
                        if side >= s.sides(ch.face) || self.slot_of.get(&point) != Some(&s.canonical(slot)) {
                            return bad(format!("chord {i} uses point {point} off its side"));
                        }
                    }
                    _ => {}
                }
            }
            if is_mark_face && ch.a != End::Mark && ch.b != End::Mark {
                return Err(Error::CurveNotSimple(format!("{} passes through a marked point's face", c.name)));
            }
            if ch.a == ch.b {
                return bad(format!("chord {i} is degenerate"));
            }
        }
        let n = c.chords.len();
        let links = if c.closed { n } else { n - 1 };
        for i in 0..links {
            let (x, y) = (&c.chords[i], &c.chords[(i + 1) % n]);
            let (End::Point { side: sx, point: px }, End::Point { side: sy, point: py }) = (x.b, y.a) else {
                return bad(format!("chords {i} and {} are not linked by a point", (i + 1) % n));
            };
            if px != py || s.partner(Slot::new(x.face, sx)) != Some(Slot::new(y.face, sy)) {
                return bad(format!("chords {i} and {} do not meet across an edge", (i + 1) % n));
            }
        }
        if !c.closed {
            for e in [c.chords[0].a, c.chords[n - 1].b] {
                if let End::Point { side, .. } = e {
                    let face = if e == c.chords[0].a { c.chords[0].face } else { c.chords[n - 1].face };
                    if !s.is_boundary(Slot::new(face, side)) {
                        return bad("arc ends in the interior of an edge".into());
                    }
                }
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for p in c.points() {
            if !seen.insert(p) {
                return Err(Error::CurveNotSimple(format!("{} visits a point twice", c.name)));
            }
        }
        if self.self_crossings(c) > 0 {
            return Err(Error::CurveNotSimple(c.name.clone()));
        }
        Ok(())
    }

    /// Every point must be used by exactly one curve.
    pub fn check_points(&self) -> Result<()> {
        let mut uses: BTreeMap<PointId, usize> = BTreeMap::new();
        for c in &self.curves {
            for p in c.points() {
                *uses.entry(p).or_default() += 1;
            }
        }
        for p in self.slot_of.keys() {
            match uses.get(p) {
                Some(1) => {}
                Some(_) => return Err(Error::MalformedSurface(format!("point {p} shared by several curves"))),
                None => return Err(Error::MalformedSurface(format!("point {p} is unused"))),
            }
        }
        Ok(())
    }

    /// Checks that the named curves are pairwise disjoint.
    pub fn check_disjoint(&self, names: &[String]) -> Result<()> {
        let cs = self.by_names(names)?;
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                if self.geometric_crossings(cs[i], cs[j]) > 0 || shares_mark(cs[i], cs[j]) {
                    return Err(Error::CurvesNotDisjoint(cs[i].name.clone(), cs[j].name.clone()));
                }
            }
        }
        Ok(())
    }
}

fn shares_mark(a: &Curve, b: &Curve) -> bool {
    let marks = |c: &Curve| -> Vec<FaceId> {
        c.chords.iter().filter(|ch| ch.a == End::Mark || ch.b == End::Mark).map(|ch| ch.face).collect()
    };
    let ma = marks(a);
    marks(b).iter().any(|f| ma.contains(f))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::cells::{TorusGrid, RIGHT, TOP};

    /// Row-0 horizontal `h`, a parallel copy `h2`, column-0 vertical `v` and a
    /// diagonal staircase `d` on the 3x3 torus grid.
    pub(crate) fn torus() -> Drawing {
        let t = TorusGrid::new(3);
        let mut b = DrawingBuilder::new(t.surface.clone());
        b.closed("h", &[(t.slot(0, 0, RIGHT), 1), (t.slot(0, 1, RIGHT), 1), (t.slot(0, 2, RIGHT), 1)]).unwrap();
        b.closed("h2", &[(t.slot(0, 0, RIGHT), 2), (t.slot(0, 1, RIGHT), 2), (t.slot(0, 2, RIGHT), 2)]).unwrap();
        b.closed("v", &[(t.slot(0, 0, TOP), 5), (t.slot(1, 0, TOP), 5), (t.slot(2, 0, TOP), 5)]).unwrap();
        b.closed(
            "d",
            &[
                (t.slot(0, 0, TOP), 8),
                (t.slot(1, 0, RIGHT), 5),
                (t.slot(1, 1, TOP), 5),
                (t.slot(2, 1, RIGHT), 5),
                (t.slot(2, 2, TOP), 5),
                (t.slot(0, 2, RIGHT), 0),
            ],
        )
        .unwrap();
        b.finish().unwrap()
    }

}

#[cfg(test)]
mod tests {
    use super::*;

    use super::fixtures::torus;

    #[test]
    fn meridian_and_longitude() {
        let d = torus();
        let (h, v) = (d.curve("h").unwrap(), d.curve("v").unwrap());
        assert_eq!(d.geometric_crossings(h, v), 1);
        assert_eq!(d.geometric_crossings(v, h), 1);
        let x = d.algebraic_intersection(h, v);
        assert_eq!(x.abs(), 1);
        assert_eq!(d.algebraic_intersection(v, h), -x);
        assert_eq!(d.geometric_crossings(h, d.curve("h2").unwrap()), 0);
    }

    #[test]
    fn diagonal_meets_both_once() {
        let d = torus();
        let dg = d.curve("d").unwrap();
        for n in ["h", "v"] {
            assert_eq!(d.algebraic_intersection(d.curve(n).unwrap(), dg).abs(), 1, "{n}");
        }
        d.check_points().unwrap();
    }

    #[test]
    fn classes_on_torus() {
        let d = torus();
        let f = CohomologyFrame::absolute(&d);
        assert_eq!(f.rank(), 2);
        let h = d.homology_class(d.curve("h").unwrap());
        assert_eq!(h, d.homology_class(d.curve("h2").unwrap()));
        let v = d.homology_class(d.curve("v").unwrap());
        let dg = d.homology_class(d.curve("d").unwrap());
        let det = h[0] * v[1] - h[1] * v[0];
        assert_eq!(det.abs(), 1);
        assert_eq!((dg[0] * h[1] - dg[1] * h[0]).abs(), 1);
        // the class pairing agrees with signed crossings up to one global sign
        let names = ["h", "v", "d"];
        let mut sigma = 0;
        for x in names {
            for y in names {
                let (cx, cy) = (d.homology_class(d.curve(x).unwrap()), d.homology_class(d.curve(y).unwrap()));
                let pair = cx[0] * cy[1] - cx[1] * cy[0];
                let alg = d.algebraic_intersection(d.curve(x).unwrap(), d.curve(y).unwrap());
                if alg != 0 && sigma == 0 {
                    sigma = pair / alg;
                }
                assert_eq!(pair, sigma * alg, "{x} {y}");
            }
        }
    }

    #[test]
    fn cutting_the_torus() {
        let d = torus();
        let a = d.cut_along_system(&["h".into()]).unwrap().surface.classify();
        assert_eq!((a.genus, a.boundary_count, a.components), (0, 2, 1));
        let two = d.cut_along_system(&["h".into(), "h2".into()]).unwrap().surface;
        two.validate().unwrap();
        assert_eq!(two.classify().components, 2);
        assert_eq!(two.euler_characteristic(), 0);
        assert_eq!(
            d.cut_along_system(&["h".into(), "v".into()]).unwrap_err(),
            Error::CurvesNotDisjoint("h".into(), "v".into())
        );
    }

    #[test]
    fn mirror_flips_signs() {
        let d = torus();
        let m = d.mirrored();
        m.surface().validate().unwrap();
        let (h, v) = (d.curve("h").unwrap(), d.curve("v").unwrap());
        let (mh, mv) = (m.curve("h").unwrap(), m.curve("v").unwrap());
        assert_eq!(m.algebraic_intersection(mh, mv), -d.algebraic_intersection(h, v));
        assert_eq!(m.geometric_crossings(mh, m.curve("d").unwrap()), d.geometric_crossings(h, d.curve("d").unwrap()));
    }
}
