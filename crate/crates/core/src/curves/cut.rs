//! Refinement of a drawing along a set of curves: every face is split into the
//! regions the curves' chords cut it into.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Drawing, End, PointId};
use crate::combsurf::{CombSurface, FaceId, Slot};
use crate::error::{Error, Result};

/// A side of a region: a piece of an original side between consecutive
/// obstacle points (`gap` counts obstacle points before it along the slot),
/// or one side of an obstacle chord.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SubSide {
    Piece { slot: Slot, gap: usize },
    Chord { curve: usize, chord: usize, forward: bool },
}

#[derive(Clone, Debug)]
pub struct Region {
    pub face: FaceId,
    pub sides: Vec<SubSide>,
}

/// The refined surface; region `i` is face `FaceId(i)` of `surface`.
#[derive(Clone, Debug)]
pub struct CutResult {
    pub surface: CombSurface,
    pub regions: Vec<Region>,
    /// obstacle points on each slot, ordered along the slot
    obstacles: BTreeMap<Slot, Vec<PointId>>,
    /// (slot, gap) -> (region, side index)
    piece_at: BTreeMap<(Slot, usize), (usize, usize)>,
}

impl CutResult {
    pub fn region_of_piece(&self, slot: Slot, gap: usize) -> Option<(usize, usize)> {
        self.piece_at.get(&(slot, gap)).copied()
    }

    /// Obstacle point just before the gap, if any.
    pub fn gap_anchor(&self, slot: Slot, gap: usize) -> Option<PointId> {
        if gap == 0 {
            None
        } else {
            self.obstacles.get(&slot).map(|v| v[gap - 1])
        }
    }

    /// Number of obstacle points on a slot.
    pub fn obstacle_count(&self, slot: Slot) -> usize {
        self.obstacles.get(&slot).map_or(0, |v| v.len())
    }

    pub fn pieces(&self, region: usize) -> impl Iterator<Item = (Slot, usize)> + '_ {
        self.regions[region].sides.iter().filter_map(|s| match s {
            SubSide::Piece { slot, gap } => Some((*slot, *gap)),
            SubSide::Chord { .. } => None,
        })
    }
}

impl Drawing {
    /// Splits every face along the chords of the given curves (by index). With
    /// `cut` the two sides of each chord stay unglued.
    pub fn refine(&self, curves: &[usize], cut: bool) -> Result<CutResult> {
        let s = &self.surface;
        let mut owned: BTreeSet<PointId> = BTreeSet::new();
        let mut chords_in: BTreeMap<FaceId, Vec<(usize, usize)>> = BTreeMap::new();
        for &ci in curves {
            let c = &self.curves[ci];
            for (k, ch) in c.chords.iter().enumerate() {
                if ch.a == End::Mark || ch.b == End::Mark {
                    return Err(Error::Precondition(format!("{} ends at a mark; cut along closed curves only", c.name)));
                }
                chords_in.entry(ch.face).or_default().push((ci, k));
            }
            owned.extend(c.points());
        }
        let mut obstacles = BTreeMap::new();
        for slot in s.slots() {
            let v: Vec<PointId> = self.points_on(slot).into_iter().filter(|p| owned.contains(p)).collect();
            obstacles.insert(slot, v);
        }
        let mut regions = Vec::new();
        for f in s.face_ids() {
            self.split_face(f, &obstacles, chords_in.get(&f).map(|v| v.as_slice()).unwrap_or(&[]), &mut regions);
        }
        let mut out = CombSurface::new();
        let mut piece_at = BTreeMap::new();
        let mut chord_at: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (r, reg) in regions.iter().enumerate() {
            let name = format!("{}~{}", s.face(reg.face).name, r);
            let id = out.add_face(name, reg.sides.len());
            debug_assert_eq!(id, FaceId(r as u32));
            for (k, side) in reg.sides.iter().enumerate() {
                match side {
                    SubSide::Piece { slot, gap } => {
                        piece_at.insert((*slot, *gap), (r, k));
                    }
                    SubSide::Chord { curve, chord, .. } => chord_at.entry((*curve, *chord)).or_default().push((r, k)),
                }
            }
        }
        for (&(slot, gap), &(r, k)) in &piece_at {
            let here = Slot::new(FaceId(r as u32), k);
            match s.partner(slot) {
                Some(p) => {
                    let n = obstacles[&slot].len();
                    let (r2, k2) = piece_at[&(p, n - gap)];
                    let there = Slot::new(FaceId(r2 as u32), k2);
                    if here < there {
                        out.glue(here, there)?;
                    }
                }
                None => {
                    if let Some(l) = s.label(slot) {
                        out.set_label(here, l.to_string());
                    }
                }
            }
        }
        if !cut {
            for sides in chord_at.values() {
                if let [(r1, k1), (r2, k2)] = sides[..] {
                    out.glue(Slot::new(FaceId(r1 as u32), k1), Slot::new(FaceId(r2 as u32), k2))?;
                }
            }
        }
        for (name, f) in s.marks() {
            let rs: Vec<usize> = (0..regions.len()).filter(|r| regions[*r].face == *f).collect();
            if let [r] = rs[..] {
                out.add_mark(name.clone(), FaceId(r as u32))?;
            }
        }
        Ok(CutResult { surface: out, regions, obstacles, piece_at })
    }

    fn split_face(
        &self,
        f: FaceId,
        obstacles: &BTreeMap<Slot, Vec<PointId>>,
        chords: &[(usize, usize)],
        regions: &mut Vec<Region>,
    ) {
        #[derive(Clone, Copy, PartialEq)]
        enum Item {
            Piece(usize, usize),
            Pt(usize, PointId),
        }
        let n = self.surface.sides(f);
        let mut items = Vec::new();
        for i in 0..n {
            let obs = &obstacles[&Slot::new(f, i)];
            for (j, p) in obs.iter().enumerate() {
                items.push(Item::Piece(i, j));
                items.push(Item::Pt(i, *p));
            }
            items.push(Item::Piece(i, obs.len()));
        }
        let pos: BTreeMap<(usize, PointId), usize> = items
            .iter()
            .enumerate()
            .filter_map(|(k, it)| match it {
                Item::Pt(i, p) => Some(((*i, *p), k)),
                _ => None,
            })
            .collect();
        // item index of a chord end -> (other end, side descriptor)
        let mut jump: BTreeMap<usize, (usize, SubSide)> = BTreeMap::new();
        for &(ci, k) in chords {
            let ch = &self.curves[ci].chords[k];
            let (End::Point { side: sa, point: pa }, End::Point { side: sb, point: pb }) = (ch.a, ch.b) else {
                continue;
            };
            let (xa, xb) = (pos[&(sa, pa)], pos[&(sb, pb)]);
            // walking the region boundary ccw we reach one end and follow the chord to the other
            jump.insert(xa, (xb, SubSide::Chord { curve: ci, chord: k, forward: true }));
            jump.insert(xb, (xa, SubSide::Chord { curve: ci, chord: k, forward: false }));
        }
        let len = items.len();
        let mut seen = vec![false; len];
        for start in 0..len {
            if seen[start] || !matches!(items[start], Item::Piece(..)) {
                continue;
            }
            let mut sides = Vec::new();
            let mut k = start;
            loop {
                match items[k] {
                    Item::Piece(i, j) => {
                        seen[k] = true;
                        sides.push(SubSide::Piece { slot: Slot::new(f, i), gap: j });
                        k = (k + 1) % len;
                    }
                    Item::Pt(..) => {
                        let (other, side) = jump[&k];
                        sides.push(side);
                        k = (other + 1) % len;
                    }
                }
                if k == start {
                    break;
                }
            }
            regions.push(Region { face: f, sides });
        }
    }

    /// Cuts the surface along a family of disjoint simple closed curves.
    pub fn cut_along_system(&self, names: &[String]) -> Result<CutResult> {
        let mut idx = Vec::new();
        for n in names {
            let i = self
                .curves
                .iter()
                .position(|c| &c.name == n)
                .ok_or_else(|| Error::MalformedCurve(n.clone(), "no such curve".into()))?;
            if self.self_crossings(&self.curves[i]) > 0 {
                return Err(Error::CurveNotSimple(n.clone()));
            }
            if !self.curves[i].closed {
                return Err(Error::MalformedCurve(n.clone(), "not closed".into()));
            }
            idx.push(i);
        }
        self.check_disjoint(names)?;
        self.refine(&idx, true)
    }

    /// Shortest path of regions from a piece on `from` to a piece on `to`
    /// (both boundary circles given as slot sets), avoiding the obstacles of `cut`.
    /// Returns the pieces crossed, starting and ending with boundary pieces.
    pub fn region_path(cut: &CutResult, s: &CombSurface, from: &BTreeSet<Slot>, to: &BTreeSet<Slot>) -> Option<Vec<(Slot, usize)>> {
        let nreg = cut.regions.len();
        let mut prev: Vec<Option<(usize, (Slot, usize), (Slot, usize))>> = vec![None; nreg];
        let mut start_piece: Vec<Option<(Slot, usize)>> = vec![None; nreg];
        let mut queue = VecDeque::new();
        let blocked: Vec<bool> = cut.regions.iter().map(|r| s.mark_of_face(r.face).is_some()).collect();
        for r in 0..nreg {
            if blocked[r] {
                continue;
            }
            if let Some(p) = cut.pieces(r).find(|(sl, _)| from.contains(sl)) {
                start_piece[r] = Some(p);
                queue.push_back(r);
            }
        }
        let mut visited: Vec<bool> = start_piece.iter().map(|x| x.is_some()).collect();
        while let Some(r) = queue.pop_front() {
            if let Some(end) = cut.pieces(r).find(|(sl, _)| to.contains(sl)) {
                let mut path = vec![end];
                let mut cur = r;
                while let Some((p, exit, entry)) = prev[cur] {
                    path.push(entry);
                    path.push(exit);
                    cur = p;
                }
                path.push(start_piece[cur].expect("path starts at a start region"));
                path.reverse();
                return Some(path);
            }
            for (sl, gap) in cut.pieces(r).collect::<Vec<_>>() {
                let Some(p) = s.partner(sl) else { continue };
                let n = cut.obstacles[&sl].len();
                let (r2, _) = cut.piece_at[&(p, n - gap)];
                if !visited[r2] && !blocked[r2] {
                    visited[r2] = true;
                    prev[r2] = Some((r, (sl, gap), (p, n - gap)));
                    queue.push_back(r2);
                }
            }
        }
        None
    }
}
