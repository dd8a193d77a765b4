//! Oriented combinatorial surfaces: polygons whose sides are glued in pairs.
//!
//! Every face is a polygon with sides numbered counter-clockwise; side `i`
//! runs from corner `i` to corner `i + 1`. Gluings always reverse the side
//! direction, so every surface built here is oriented by construction.
//! Unpaired sides form the boundary.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub u32);

/// One side of one face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub face: FaceId,
    pub side: usize,
}

impl Slot {
    pub fn new(face: FaceId, side: usize) -> Self {
        Slot { face, side }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}.{}", self.face.0, self.side)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub name: String,
    pub sides: usize,
}

/// Topological type of a surface (summed over components).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceClass {
    pub genus: u32,
    pub boundary_count: u32,
    pub components: u32,
    pub orientable: bool,
}

impl SurfaceClass {
    pub fn euler_characteristic(&self) -> i64 {
        2 * self.components as i64 - 2 * self.genus as i64 - self.boundary_count as i64
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "genus {} boundary {} components {} {}",
            self.genus,
            self.boundary_count,
            self.components,
            if self.orientable { "orientable" } else { "non-orientable" }
        )
    }
}

/// Whether a band is glued flat or with a half twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BandTwist {
    Untwisted,
    HalfTwist,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CombSurface {
    faces: BTreeMap<FaceId, Face>,
    pairing: BTreeMap<Slot, Slot>,
    /// Marked points; each lives in the interior of its own (mark) face.
    marks: BTreeMap<String, FaceId>,
    /// Names attached to boundary slots; a circle is named by its smallest label.
    labels: BTreeMap<Slot, String>,
    next_face: u32,
}

/// Vertex structure: corner `(f, i)` is the start point of side `i` of face `f`.
#[derive(Clone, Debug)]
pub struct Vertices {
    pub of_corner: BTreeMap<Slot, usize>,
    pub count: usize,
}

impl CombSurface {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_face(&mut self, name: impl Into<String>, sides: usize) -> FaceId {
        assert!(sides > 0, "faces need at least one side");
        let id = FaceId(self.next_face);
        self.next_face += 1;
        self.faces.insert(id, Face { name: name.into(), sides });
        id
    }

    pub fn glue(&mut self, a: Slot, b: Slot) -> Result<()> {
        for s in [a, b] {
            let face = self.faces.get(&s.face).ok_or_else(|| Error::UnknownFace(s.to_string()))?;
            if s.side >= face.sides {
                return Err(Error::MalformedSurface(format!("no side {s}")));
            }
            if self.pairing.contains_key(&s) {
                return Err(Error::DanglingPairing(format!("{} is already paired", self.slot_name(s))));
            }
        }
        if a == b {
            return Err(Error::MalformedSurface(format!("{a} glued to itself")));
        }
        self.labels.remove(&a);
        self.labels.remove(&b);
        self.pairing.insert(a, b);
        self.pairing.insert(b, a);
        Ok(())
    }

    pub fn add_mark(&mut self, name: impl Into<String>, face: FaceId) -> Result<()> {
        let name = name.into();
        if !self.faces.contains_key(&face) {
            return Err(Error::UnknownFace(format!("{face:?}")));
        }
        if self.marks.values().any(|f| *f == face) {
            return Err(Error::MalformedSurface(format!("face {} already carries a mark", self.faces[&face].name)));
        }
        self.marks.insert(name, face);
        Ok(())
    }

    pub fn set_label(&mut self, slot: Slot, label: impl Into<String>) {
        debug_assert!(self.is_boundary(slot));
        self.labels.insert(slot, label.into());
    }

    pub fn label(&self, slot: Slot) -> Option<&str> {
        self.labels.get(&slot).map(|s| s.as_str())
    }

    pub fn labels(&self) -> &BTreeMap<Slot, String> {
        &self.labels
    }

    pub fn marks(&self) -> &BTreeMap<String, FaceId> {
        &self.marks
    }

    pub fn mark_face(&self, name: &str) -> Result<FaceId> {
        self.marks.get(name).copied().ok_or_else(|| Error::UnknownMark(name.to_string()))
    }

    pub fn mark_of_face(&self, face: FaceId) -> Option<&str> {
        self.marks.iter().find(|(_, f)| **f == face).map(|(n, _)| n.as_str())
    }

    pub fn face_ids(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.faces.keys().copied()
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[&id]
    }

    pub fn has_face(&self, id: FaceId) -> bool {
        self.faces.contains_key(&id)
    }

    pub fn face_by_name(&self, name: &str) -> Option<FaceId> {
        self.faces.iter().find(|(_, f)| f.name == name).map(|(id, _)| *id)
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn sides(&self, id: FaceId) -> usize {
        self.faces[&id].sides
    }

    pub fn slot_name(&self, s: Slot) -> String {
        match self.faces.get(&s.face) {
            Some(f) => format!("{}.{}", f.name, s.side),
            None => s.to_string(),
        }
    }

    pub fn partner(&self, s: Slot) -> Option<Slot> {
        self.pairing.get(&s).copied()
    }

    pub fn is_boundary(&self, s: Slot) -> bool {
        !self.pairing.contains_key(&s)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Slot, Slot)> + '_ {
        self.pairing.iter().filter(|(a, b)| a < b).map(|(a, b)| (*a, *b))
    }

    pub fn slots(&self) -> impl Iterator<Item = Slot> + '_ {
        self.faces.iter().flat_map(|(id, f)| (0..f.sides).map(move |i| Slot::new(*id, i)))
    }

    pub fn boundary_slots(&self) -> impl Iterator<Item = Slot> + '_ {
        self.slots().filter(move |s| self.is_boundary(*s))
    }

    /// The slot that represents the edge containing `s`: the smaller of the pair.
    pub fn canonical(&self, s: Slot) -> Slot {
        match self.partner(s) {
            Some(p) if p < s => p,
            _ => s,
        }
    }

    /// One representative slot per edge, sorted.
    pub fn edges(&self) -> Vec<Slot> {
        self.slots().filter(|s| self.canonical(*s) == *s).collect()
    }

    pub fn next_side(&self, s: Slot) -> Slot {
        Slot::new(s.face, (s.side + 1) % self.sides(s.face))
    }

    pub fn prev_side(&self, s: Slot) -> Slot {
        let n = self.sides(s.face);
        Slot::new(s.face, (s.side + n - 1) % n)
    }

    pub fn vertices(&self) -> Vertices {
        let corners: Vec<Slot> = self.slots().collect();
        let index: BTreeMap<Slot, usize> = corners.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut uf = UnionFind::new(corners.len());
        for (a, b) in self.pairs() {
            // corner a ~ end of b, end of a ~ corner b
            uf.union(index[&a], index[&self.next_side(b)]);
            uf.union(index[&self.next_side(a)], index[&b]);
        }
        let mut remap = BTreeMap::new();
        let mut of_corner = BTreeMap::new();
        for c in &corners {
            let root = uf.find(index[c]);
            let next = remap.len();
            let v = *remap.entry(root).or_insert(next);
            of_corner.insert(*c, v);
        }
        Vertices { count: remap.len(), of_corner }
    }

    /// Start and end vertex of the side `s`, in the direction of `s`.
    pub fn side_vertices(&self, verts: &Vertices, s: Slot) -> (usize, usize) {
        (verts.of_corner[&s], verts.of_corner[&self.next_side(s)])
    }

    pub fn edge_count(&self) -> usize {
        self.pairing.len() / 2 + self.boundary_slots().count()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices().count as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }

    /// Boundary slot following `s` along its boundary circle (surface on the left).
    pub fn next_boundary(&self, s: Slot) -> Slot {
        let mut c = self.next_side(s);
        loop {
            match self.partner(c) {
                None => return c,
                Some(p) => c = self.next_side(p),
            }
        }
    }

    /// Boundary circles, each listed in traversal order from its smallest slot.
    pub fn boundary_circles(&self) -> Vec<Vec<Slot>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.boundary_slots() {
            if seen.contains(&s) {
                continue;
            }
            let mut circle = vec![s];
            seen.insert(s);
            let mut c = self.next_boundary(s);
            while c != s {
                seen.insert(c);
                circle.push(c);
                c = self.next_boundary(c);
            }
            out.push(circle);
        }
        out
    }

    /// Name of the boundary circle through `s`: its smallest label, if any.
    pub fn circle_name(&self, circle: &[Slot]) -> Option<String> {
        circle.iter().filter_map(|s| self.labels.get(s)).min().cloned()
    }

    /// Face connected components (sorted face lists).
    pub fn components(&self) -> Vec<Vec<FaceId>> {
        let ids: Vec<FaceId> = self.face_ids().collect();
        let index: BTreeMap<FaceId, usize> = ids.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut uf = UnionFind::new(ids.len());
        for (a, b) in self.pairs() {
            uf.union(index[&a.face], index[&b.face]);
        }
        let mut groups: BTreeMap<usize, Vec<FaceId>> = BTreeMap::new();
        for f in &ids {
            groups.entry(uf.find(index[f])).or_default().push(*f);
        }
        let mut out: Vec<Vec<FaceId>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Per-component classification, components ordered by smallest face id.
    pub fn classify_components(&self) -> Vec<SurfaceClass> {
        let verts = self.vertices();
        let circles = self.boundary_circles();
        self.components()
            .into_iter()
            .map(|faces| {
                let set: BTreeSet<FaceId> = faces.iter().copied().collect();
                let mut vs = BTreeSet::new();
                let mut edges = 0i64;
                for f in &faces {
                    for i in 0..self.sides(*f) {
                        let s = Slot::new(*f, i);
                        vs.insert(verts.of_corner[&s]);
                        if self.canonical(s) == s {
                            edges += 1;
                        }
                    }
                }
                let b = circles.iter().filter(|c| set.contains(&c[0].face)).count() as i64;
                let chi = vs.len() as i64 - edges + faces.len() as i64;
                let genus = (2 - chi - b) / 2;
                SurfaceClass { genus: genus.max(0) as u32, boundary_count: b as u32, components: 1, orientable: true }
            })
            .collect()
    }

    pub fn classify(&self) -> SurfaceClass {
        let parts = self.classify_components();
        SurfaceClass {
            genus: parts.iter().map(|c| c.genus).sum(),
            boundary_count: parts.iter().map(|c| c.boundary_count).sum(),
            components: parts.len() as u32,
            orientable: true,
        }
    }

    /// Structural checks: every vertex link is a single cycle or a single path.
    pub fn validate(&self) -> Result<()> {
        for (a, b) in &self.pairing {
            if self.pairing.get(b) != Some(a) {
                return Err(Error::DanglingPairing(format!("{a} -> {b} is not symmetric")));
            }
            if !self.faces.contains_key(&a.face) || a.side >= self.sides(a.face) {
                return Err(Error::DanglingPairing(format!("{a} refers to a missing side")));
            }
        }
        let verts = self.vertices();
        // Each corner has one "incoming" neighbour (across side i-1) and one "outgoing" (across side i).
        let mut corners_of: Vec<Vec<Slot>> = vec![Vec::new(); verts.count];
        for (c, v) in &verts.of_corner {
            corners_of[*v].push(*c);
        }
        for (v, corners) in corners_of.iter().enumerate() {
            let boundary_ends = corners.iter().filter(|c| self.is_boundary(**c)).count();
            if boundary_ends > 1 {
                return Err(Error::MalformedSurface(format!("vertex {v} touches the boundary more than once")));
            }
            // Walk the link from one corner and check it reaches all corners.
            let start = corners
                .iter()
                .copied()
                .find(|c| self.is_boundary(self.prev_side(*c)))
                .unwrap_or(corners[0]);
            let mut seen = 1;
            let mut c = start;
            loop {
                match self.partner(c) {
                    None => break,
                    Some(p) => {
                        c = self.next_side(p);
                        if c == start {
                            break;
                        }
                        seen += 1;
                    }
                }
            }
            if seen != corners.len() {
                return Err(Error::MalformedSurface(format!(
                    "vertex {v} is not a manifold point ({seen} of {} corners linked)",
                    corners.len()
                )));
            }
        }
        Ok(())
    }

    /// Opposite orientation: side `i` of an `n`-gon becomes side `n - 1 - i`.
    pub fn mirrored(&self) -> Self {
        let flip = |s: Slot| Slot::new(s.face, self.sides(s.face) - 1 - s.side);
        CombSurface {
            faces: self.faces.clone(),
            pairing: self.pairing.iter().map(|(a, b)| (flip(*a), flip(*b))).collect(),
            marks: self.marks.clone(),
            labels: self.labels.iter().map(|(s, l)| (flip(*s), l.clone())).collect(),
            next_face: self.next_face,
        }
    }

    /// Removes a face; its former neighbours become boundary.
    pub fn delete_face(&mut self, id: FaceId) -> Result<Vec<Slot>> {
        let n = self.faces.get(&id).ok_or_else(|| Error::UnknownFace(format!("{id:?}")))?.sides;
        let mut freed = Vec::new();
        for i in 0..n {
            let s = Slot::new(id, i);
            if let Some(p) = self.pairing.remove(&s) {
                self.pairing.remove(&p);
                if p.face != id {
                    freed.push(p);
                }
            }
            self.labels.remove(&s);
        }
        self.faces.remove(&id);
        self.marks.retain(|_, f| *f != id);
        Ok(freed)
    }

    /// Removes an open disk around a mark: the mark face is deleted and the new
    /// boundary circle takes the mark's name.
    pub fn delete_marked_disk(&self, mark: &str) -> Result<CombSurface> {
        let mut out = self.clone();
        let face = out.mark_face(mark)?;
        for s in out.delete_face(face)? {
            out.labels.insert(s, mark.to_string());
        }
        Ok(out)
    }

    /// Inserts a corner into boundary side `s`, splitting it into `s` and `s + 1`;
    /// later sides of the face shift up by one.
    pub fn split_boundary_side(&mut self, s: Slot) -> Result<()> {
        if !self.is_boundary(s) {
            return Err(Error::NotBoundary(self.slot_name(s)));
        }
        let shift = |t: Slot| if t.face == s.face && t.side > s.side { Slot::new(t.face, t.side + 1) } else { t };
        self.pairing = self.pairing.iter().map(|(a, b)| (shift(*a), shift(*b))).collect();
        let mut labels: BTreeMap<Slot, String> = self.labels.iter().map(|(a, l)| (shift(*a), l.clone())).collect();
        if let Some(l) = labels.get(&s).cloned() {
            labels.insert(Slot::new(s.face, s.side + 1), l);
        }
        self.labels = labels;
        self.faces.get_mut(&s.face).expect("face exists").sides += 1;
        Ok(())
    }

    /// Inserts a vertex in the middle of the interior edge at `s`. Returns the
    /// new positions of `s` and its partner: the first half of `s` is glued to
    /// the second half of the partner.
    pub fn split_edge(&mut self, s: Slot) -> Result<(Slot, Slot)> {
        let p = self.partner(s).ok_or_else(|| Error::MalformedSurface(format!("{} is a boundary side", self.slot_name(s))))?;
        self.pairing.remove(&s);
        self.pairing.remove(&p);
        self.split_boundary_side(s)?;
        let p1 = if p.face == s.face && p.side > s.side { Slot::new(p.face, p.side + 1) } else { p };
        self.split_boundary_side(p1)?;
        let s1 = if s.face == p1.face && s.side > p1.side { Slot::new(s.face, s.side + 1) } else { s };
        for t in [s1, Slot::new(s1.face, s1.side + 1), p1, Slot::new(p1.face, p1.side + 1)] {
            self.labels.remove(&t);
        }
        self.glue(s1, Slot::new(p1.face, p1.side + 1))?;
        self.glue(Slot::new(s1.face, s1.side + 1), p1)?;
        Ok((s1, p1))
    }

    /// Glues a square band to boundary sides `a` and `b`. Returns the band face;
    /// its sides 0 and 2 are the feet, sides 1 and 3 are new boundary.
    pub fn attach_band(&mut self, name: impl Into<String>, a: Slot, b: Slot, twist: BandTwist) -> Result<FaceId> {
        if twist == BandTwist::HalfTwist {
            return Err(Error::NonOrientableResult);
        }
        if a == b {
            return Err(Error::OverlappingIntervals);
        }
        for s in [a, b] {
            if !self.is_boundary(s) {
                return Err(Error::NotBoundary(self.slot_name(s)));
            }
        }
        let la = self.labels.get(&a).cloned();
        let lb = self.labels.get(&b).cloned();
        let band = self.add_face(name, 4);
        self.glue(Slot::new(band, 0), a)?;
        self.glue(Slot::new(band, 2), b)?;
        if let Some(l) = la {
            self.labels.insert(Slot::new(band, 3), l);
        }
        if let Some(l) = lb {
            self.labels.insert(Slot::new(band, 1), l);
        }
        Ok(band)
    }

    /// Copies `other` into `self`, prefixing face names. Returns the face id map.
    pub fn absorb(&mut self, other: &CombSurface, prefix: &str) -> BTreeMap<FaceId, FaceId> {
        let mut map = BTreeMap::new();
        for (id, f) in &other.faces {
            let new = self.add_face(format!("{prefix}{}", f.name), f.sides);
            map.insert(*id, new);
        }
        let m = |s: &Slot| Slot::new(map[&s.face], s.side);
        for (a, b) in &other.pairing {
            self.pairing.insert(m(a), m(b));
        }
        for (name, f) in &other.marks {
            self.marks.insert(format!("{prefix}{name}"), map[f]);
        }
        for (s, l) in &other.labels {
            self.labels.insert(m(s), l.clone());
        }
        map
    }

    /// Deletes two interior `n`-gons and glues their former neighbours so the
    /// two holes are identified (a connected sum when they lie in different
    /// components).
    pub fn sum_along_faces(&mut self, f1: FaceId, f2: FaceId) -> Result<()> {
        let n = self.sides(f1);
        if self.sides(f2) != n {
            return Err(Error::MalformedSurface("sum faces have different side counts".into()));
        }
        let nb = |s: &Self, f: FaceId, k: usize| {
            s.partner(Slot::new(f, k)).ok_or_else(|| Error::MalformedSurface("sum face touches the boundary".into()))
        };
        let xs: Vec<Slot> = (0..n).map(|k| nb(self, f1, k)).collect::<Result<_>>()?;
        let ys: Vec<Slot> = (0..n).map(|k| nb(self, f2, k)).collect::<Result<_>>()?;
        self.delete_face(f1)?;
        self.delete_face(f2)?;
        for k in 0..n {
            self.glue(xs[k], ys[(n - k) % n])?;
        }
        Ok(())
    }

    /// Renames faces (used when normalising names).
    pub fn rename_face(&mut self, id: FaceId, name: impl Into<String>) {
        if let Some(f) = self.faces.get_mut(&id) {
            f.name = name.into();
        }
    }
}

/// Canonical model of the genus-`g` surface with `b` boundary circles: one
/// polygon with the word a1 b1 a1' b1' ... (a a' b b' when g = 0), followed by
/// a triple e ∂ e' per boundary circle with e glued to e'.
pub fn standard_surface(g: u32, b: u32) -> CombSurface {
    let mut s = CombSurface::new();
    let head = if g == 0 { 4 } else { 4 * g as usize };
    let n = head + 3 * b as usize;
    let f = s.add_face("P", n);
    if g == 0 {
        s.glue(Slot::new(f, 0), Slot::new(f, 1)).unwrap();
        s.glue(Slot::new(f, 2), Slot::new(f, 3)).unwrap();
    } else {
        for h in 0..g as usize {
            let o = 4 * h;
            s.glue(Slot::new(f, o), Slot::new(f, o + 2)).unwrap();
            s.glue(Slot::new(f, o + 1), Slot::new(f, o + 3)).unwrap();
        }
    }
    for k in 0..b as usize {
        let o = head + 3 * k;
        s.glue(Slot::new(f, o), Slot::new(f, o + 2)).unwrap();
        s.set_label(Slot::new(f, o + 1), format!("d{k}"));
    }
    s
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_surfaces_have_expected_type() {
        for g in 0..4 {
            for b in 0..4 {
                let s = standard_surface(g, b);
                s.validate().unwrap();
                assert_eq!(s.euler_characteristic(), 2 - 2 * g as i64 - b as i64, "g={g} b={b}");
                let c = s.classify();
                assert_eq!((c.genus, c.boundary_count, c.components), (g, b, 1));
            }
        }
    }

    #[test]
    fn pants_page() {
        let s = standard_surface(0, 3);
        assert_eq!(s.euler_characteristic(), -1);
        assert_eq!(s.boundary_circles().len(), 3);
    }

    #[test]
    fn band_on_disk_gives_annulus() {
        let mut s = standard_surface(0, 1);
        let circle = s.boundary_circles()[0][0];
        s.split_boundary_side(circle).unwrap();
        let c = s.boundary_circles();
        assert_eq!(c[0].len(), 2);
        s.attach_band("band", c[0][0], c[0][1], BandTwist::Untwisted).unwrap();
        s.validate().unwrap();
        let k = s.classify();
        assert_eq!((k.genus, k.boundary_count), (0, 2));
        assert_eq!(s.euler_characteristic(), 0);
    }

    #[test]
    fn band_joining_two_circles_merges_them() {
        let mut s = standard_surface(0, 2);
        let c = s.boundary_circles();
        s.attach_band("band", c[0][0], c[1][0], BandTwist::Untwisted).unwrap();
        s.validate().unwrap();
        let k = s.classify();
        assert_eq!(s.euler_characteristic(), -1);
        assert_eq!((k.genus, k.boundary_count), (1, 1));
    }

    #[test]
    fn half_twisted_band_is_rejected() {
        let mut s = standard_surface(0, 2);
        let c = s.boundary_circles();
        assert_eq!(s.attach_band("b", c[0][0], c[1][0], BandTwist::HalfTwist), Err(Error::NonOrientableResult));
        assert_eq!(s.attach_band("b", c[0][0], c[0][0], BandTwist::Untwisted), Err(Error::OverlappingIntervals));
    }

    #[test]
    fn mirror_preserves_type() {
        let s = standard_surface(2, 1);
        let m = s.mirrored();
        m.validate().unwrap();
        assert_eq!(m.classify(), s.classify());
    }

    #[test]
    fn connected_sum_of_tori() {
        let mut s = CombSurface::new();
        let t1 = standard_surface(1, 0);
        // cap the hole of a once-holed torus with a one-sided face
        let mut holed = standard_surface(1, 1);
        let hole = holed.boundary_circles()[0][0];
        let cap = holed.add_face("cap", 1);
        holed.glue(Slot::new(cap, 0), hole).unwrap();
        holed.validate().unwrap();
        assert_eq!(holed.euler_characteristic(), t1.euler_characteristic());
        let m1 = s.absorb(&holed, "x");
        let m2 = s.absorb(&holed, "y");
        s.sum_along_faces(m1[&cap], m2[&cap]).unwrap();
        s.validate().unwrap();
        assert_eq!(s.classify().genus, 2);
    }

    #[test]
    fn delete_mark() {
        let s = {
            let mut h = standard_surface(1, 1);
            let side = h.boundary_circles()[0][0];
            let cap = h.add_face("m", 1);
            h.glue(Slot::new(cap, 0), side).unwrap();
            h.add_mark("p", cap).unwrap();
            h
        };
        let d = s.delete_marked_disk("p").unwrap();
        assert_eq!(d.euler_characteristic(), s.euler_characteristic() - 1);
        let circles = d.boundary_circles();
        assert_eq!(circles.len(), 1);
        assert_eq!(d.circle_name(&circles[0]).as_deref(), Some("p"));
        assert_eq!(s.delete_marked_disk("q"), Err(Error::UnknownMark("q".into())));
    }
}
