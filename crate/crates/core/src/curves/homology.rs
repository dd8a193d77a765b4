//! Crossing cochains: a curve assigns to each edge the signed number of times
//! it crosses it. These are cocycles, and their classes carry the homology of
//! the curves (Poincaré–Lefschetz dual).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Curve, Drawing, End};
use crate::combsurf::Slot;
use crate::invariants::snf::{smith_normal_form, solve_with, IntMatrix, SnfResult};

pub type Cochain = Vec<i64>;

impl Drawing {
    /// Edges indexed for cochains; boundary edges are dropped when `interior_only`.
    pub fn edge_list(&self, interior_only: bool) -> Vec<Slot> {
        let s = &self.surface;
        s.edges().into_iter().filter(|e| !interior_only || !s.is_boundary(*e)).collect()
    }

    /// Signed crossing count of `c` on each edge of `edges`. Leaving a face
    /// through its canonical slot counts +1. Arc ends on the boundary count as
    /// crossings of the boundary edge.
    pub fn cochain_on(&self, c: &Curve, edges: &[Slot]) -> Cochain {
        let index: BTreeMap<Slot, usize> = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let s = &self.surface;
        let mut v = vec![0i64; edges.len()];
        let mut add = |slot: Slot, exit: bool| {
            let canon = s.canonical(slot);
            if let Some(i) = index.get(&canon) {
                let sign = if canon == slot { 1 } else { -1 };
                v[*i] += if exit { sign } else { -sign };
            }
        };
        for ch in &c.chords {
            if let End::Point { side, .. } = ch.b {
                add(Slot::new(ch.face, side), true);
            }
        }
        if !c.closed {
            if let End::Point { side, .. } = c.chords[0].a {
                add(Slot::new(c.chords[0].face, side), false);
            }
        }
        v
    }

    pub fn cochain(&self, c: &Curve) -> Cochain {
        self.cochain_on(c, &self.edge_list(false))
    }

    /// Coboundary of the indicator of each listed vertex, restricted to `edges`.
    pub fn vertex_coboundaries(&self, edges: &[Slot], vertices: &[usize]) -> Vec<Cochain> {
        let s = &self.surface;
        let verts = s.vertices();
        vertices
            .iter()
            .map(|v| {
                edges
                    .iter()
                    .map(|e| {
                        let (a, b) = s.side_vertices(&verts, *e);
                        i64::from(b == *v) - i64::from(a == *v)
                    })
                    .collect()
            })
            .collect()
    }

    /// Face-by-edge matrix of the coboundary on 1-cochains over `edges`.
    pub fn face_matrix(&self, edges: &[Slot]) -> IntMatrix {
        let s = &self.surface;
        let index: BTreeMap<Slot, usize> = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let faces: Vec<_> = s.face_ids().collect();
        let mut rows = vec![vec![0i64; edges.len()]; faces.len()];
        for (r, f) in faces.iter().enumerate() {
            for i in 0..s.sides(*f) {
                let slot = Slot::new(*f, i);
                let canon = s.canonical(slot);
                if let Some(j) = index.get(&canon) {
                    rows[r][*j] += if canon == slot { 1 } else { -1 };
                }
            }
        }
        IntMatrix::from_rows(&rows)
    }

    /// Vertices lying on the boundary.
    pub fn boundary_vertices(&self) -> BTreeSet<usize> {
        let s = &self.surface;
        let verts = s.vertices();
        s.boundary_slots().map(|b| verts.of_corner[&b]).collect()
    }
}

/// A fixed basis for the cocycles modulo a chosen set of coboundaries.
pub struct CohomologyFrame {
    pub edges: Vec<Slot>,
    kernel_snf: SnfResult,
    quotient: SnfResult,
}

impl CohomologyFrame {
    /// `interior_only` selects relative cochains; `vertices` lists the vertices
    /// whose coboundaries are divided out.
    pub fn new(d: &Drawing, interior_only: bool, vertices: &[usize]) -> Self {
        let edges = d.edge_list(interior_only);
        let kernel = kernel_matrix(&d.face_matrix(&edges));
        let kernel_snf = smith_normal_form(&kernel);
        let cobs = d.vertex_coboundaries(&edges, vertices);
        let coords: Vec<Vec<i64>> = cobs
            .iter()
            .map(|c| {
                let y = solve_with(&kernel_snf, &big(c)).expect("coboundaries are cocycles");
                y.iter().map(|x| x.to_i64().expect("small")).collect()
            })
            .collect();
        let quotient = smith_normal_form(&IntMatrix::from_columns(kernel.cols(), &coords));
        CohomologyFrame { edges, kernel_snf, quotient }
    }

    /// Homology of a surface: relative cochains modulo interior-vertex coboundaries.
    pub fn absolute(d: &Drawing) -> Self {
        let bv = d.boundary_vertices();
        let inner: Vec<usize> = (0..d.surface.vertices().count).filter(|v| !bv.contains(v)).collect();
        Self::new(d, true, &inner)
    }

    pub fn rank(&self) -> usize {
        self.quotient.u.rows() - self.quotient.rank
    }

    /// Coordinates of a cocycle in the frame, `None` if it is not a cocycle.
    pub fn coords(&self, c: &[i64]) -> Option<Vec<i64>> {
        let y = solve_with(&self.kernel_snf, &big(c))?;
        let uy = self.quotient.u.mul_vec(&y);
        Some(uy[self.quotient.rank..].iter().map(|x| x.to_i64().expect("small")).collect())
    }
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|x| BigInt::from(*x)).collect()
}

/// Columns spanning the integer kernel of `a`.
pub(crate) fn kernel_matrix(a: &IntMatrix) -> IntMatrix {
    let r = smith_normal_form(a);
    let cols = a.cols();
    let mut k = IntMatrix::zeros(cols, cols - r.rank);
    for (j, col) in (r.rank..cols).enumerate() {
        for i in 0..cols {
            k.set(i, j, r.v.get(i, col).clone());
        }
    }
    if k.cols() == 0 {
        return IntMatrix::zeros(cols, 0);
    }
    debug_assert!(a.mul(&k).column(0).iter().all(|x| x.is_zero()));
    k
}

impl Drawing {
    /// Class of a closed curve in H1 of the surface, in the fixed frame.
    pub fn homology_class(&self, c: &Curve) -> Vec<i64> {
        let f = CohomologyFrame::absolute(self);
        let co = self.cochain_on(c, &f.edges);
        f.coords(&co).expect("closed curves give cocycles")
    }
}
