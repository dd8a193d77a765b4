//! Homology classes of paths, tracked crossing by crossing.
//!
//! Each interior edge gets a weight vector: its pairing with a basis of the
//! relative 1-cycles. Summing the weights of the edges a path leaves through
//! is linear in the path and, on closed paths, determines the homology class.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::cut::CutResult;
use super::{Curve, Drawing, End};
use crate::combsurf::Slot;
use crate::error::{Error, Result};
use crate::invariants::snf::{kernel_basis, smith_normal_form, IntMatrix, SnfResult};

pub struct ClassTracker {
    index: BTreeMap<Slot, usize>,
    /// one row per relative cycle, one column per interior edge
    cycles: Vec<Vec<i64>>,
}

impl ClassTracker {
    pub fn new(d: &Drawing) -> Self {
        let edges = d.edge_list(true);
        let bv = d.boundary_vertices();
        let inner: Vec<usize> = (0..d.surface().vertices().count).filter(|v| !bv.contains(v)).collect();
        let rows = d.vertex_coboundaries(&edges, &inner);
        let cycles = if rows.is_empty() {
            (0..edges.len()).map(|i| (0..edges.len()).map(|j| i64::from(i == j)).collect()).collect()
        } else {
            kernel_basis(&IntMatrix::from_rows(&rows))
                .into_iter()
                .map(|v| v.iter().map(|x| x.to_i64().expect("small")).collect())
                .collect()
        };
        let index = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        ClassTracker { index, cycles }
    }

    pub fn dim(&self) -> usize {
        self.cycles.len()
    }

    /// Contribution of leaving a face through `slot`; zero on the boundary.
    pub fn weight(&self, d: &Drawing, slot: Slot) -> Vec<i64> {
        let s = d.surface();
        let canon = s.canonical(slot);
        match self.index.get(&canon) {
            Some(&i) if !s.is_boundary(slot) => {
                let sign = if canon == slot { 1 } else { -1 };
                self.cycles.iter().map(|row| sign * row[i]).collect()
            }
            _ => vec![0; self.dim()],
        }
    }

    pub fn of_curve(&self, d: &Drawing, c: &Curve) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        for ch in &c.chords {
            if let End::Point { side, .. } = ch.b {
                for (x, w) in v.iter_mut().zip(self.weight(d, Slot::new(ch.face, side))) {
                    *x += w;
                }
            }
        }
        v
    }
}

/// Reduction of vectors modulo a sublattice.
pub struct Quotient {
    snf: SnfResult,
}

impl Quotient {
    pub fn new(dim: usize, lattice: &[Vec<i64>]) -> Self {
        let m = if lattice.is_empty() { IntMatrix::zeros(dim, 0) } else { IntMatrix::from_columns(dim, lattice) };
        Quotient { snf: smith_normal_form(&m) }
    }

    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        let big: Vec<_> = x.iter().map(|v| num_bigint::BigInt::from(*v)).collect();
        let ux = self.snf.u.mul_vec(&big);
        ux.iter()
            .enumerate()
            .map(|(i, v)| {
                let v = if i < self.snf.rank { v.mod_floor(self.snf.s.get(i, i)) } else { v.clone() };
                v.to_i64().expect("small")
            })
            .collect()
    }
}

impl Drawing {
    /// Draws an arc from boundary slot `from` to boundary slot `to`, avoiding
    /// the named curves, whose class differs from `target` by an element of
    /// `modulo`. Classes are measured by `tracker`.
    pub fn draw_arc_in_class(
        &mut self,
        name: &str,
        avoid: &[String],
        from: Slot,
        to: Slot,
        target: &[i64],
        modulo: &[Vec<i64>],
        tracker: &ClassTracker,
    ) -> Result<()> {
        let idx: Vec<usize> = avoid
            .iter()
            .map(|n| self.curves.iter().position(|c| &c.name == n).ok_or_else(|| Error::MalformedCurve(n.clone(), "no such curve".into())))
            .collect::<Result<_>>()?;
        let cut = self.refine(&idx, true)?;
        let q = Quotient::new(tracker.dim(), modulo);
        let goal = q.reduce(target);
        let path = self
            .class_path(&cut, &q, from, to, &goal, tracker, 200_000)
            .ok_or_else(|| Error::CompletionFailed(format!("no arc {name} in the required class")))?;
        self.draw_simple_arc_along(name, &cut, &path)
    }

    #[allow(clippy::too_many_arguments)]
    fn class_path(
        &self,
        cut: &CutResult,
        q: &Quotient,
        from: Slot,
        to: Slot,
        goal: &[i64],
        tracker: &ClassTracker,
        limit: usize,
    ) -> Option<Vec<(Slot, usize)>> {
        let s = &self.surface;
        let mut rw: HashMap<Slot, Vec<i64>> = HashMap::new();
        let zero = q.reduce(&vec![0; tracker.dim()]);
        let moduli: Vec<Option<i64>> = (0..zero.len())
            .map(|i| if i < q.snf.rank { q.snf.s.get(i, i).to_i64() } else { None })
            .collect();
        type State = (usize, Vec<i64>);
        let mut prev: HashMap<State, Option<(State, (Slot, usize), (Slot, usize))>> = HashMap::new();
        let mut queue = VecDeque::new();
        let start_piece = (from, 0usize);
        let (r0, _) = cut.region_of_piece(from, 0)?;
        let start: State = (r0, zero);
        prev.insert(start.clone(), None);
        queue.push_back(start);
        let blocked: BTreeSet<usize> = (0..cut.regions.len()).filter(|r| s.mark_of_face(cut.regions[*r].face).is_some()).collect();
        while let Some(st) = queue.pop_front() {
            if prev.len() > limit {
                return None;
            }
            let (r, ref v) = st;
            if v.as_slice() == goal {
                if let Some(end) = cut.pieces(r).find(|(sl, _)| *sl == to) {
                    let mut path = vec![end];
                    let mut cur = st.clone();
                    while let Some(Some((p, exit, entry))) = prev.get(&cur) {
                        path.push(*entry);
                        path.push(*exit);
                        cur = p.clone();
                    }
                    path.push(start_piece);
                    path.reverse();
                    return Some(path);
                }
            }
            for (sl, gap) in cut.pieces(r).collect::<Vec<_>>() {
                let Some(p) = s.partner(sl) else { continue };
                let n = cut.obstacle_count(sl);
                let Some((r2, _)) = cut.region_of_piece(p, n - gap) else { continue };
                if blocked.contains(&r2) {
                    continue;
                }
                let w = rw.entry(sl).or_insert_with(|| q.reduce(&tracker.weight(self, sl)));
                let nv: Vec<i64> = v
                    .iter()
                    .zip(w.iter())
                    .zip(&moduli)
                    .map(|((a, b), m)| match m {
                        Some(m) => (a + b).rem_euclid(*m),
                        None => a + b,
                    })
                    .collect();
                let next = (r2, nv);
                if !prev.contains_key(&next) {
                    prev.insert(next.clone(), Some((st.clone(), (sl, gap), (p, n - gap))));
                    queue.push_back(next);
                }
            }
        }
        None
    }
}
