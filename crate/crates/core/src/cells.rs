//! Cellulations used to draw the catalog diagrams.

use crate::combsurf::{CombSurface, FaceId, Slot};

/// Square sides.
pub const BOTTOM: usize = 0;
pub const RIGHT: usize = 1;
pub const TOP: usize = 2;
pub const LEFT: usize = 3;

/// An `n` by `n` grid of squares on the torus; `cell[r][c]` is row `r`
/// (counted upwards) and column `c`.
pub struct TorusGrid {
    pub surface: CombSurface,
    pub cell: Vec<Vec<FaceId>>,
}

impl TorusGrid {
    pub fn new(n: usize) -> Self {
        let mut s = CombSurface::new();
        let cell: Vec<Vec<FaceId>> =
            (0..n).map(|r| (0..n).map(|c| s.add_face(format!("t{r}{c}"), 4)).collect()).collect();
        for r in 0..n {
            for c in 0..n {
                s.glue(Slot::new(cell[r][c], RIGHT), Slot::new(cell[r][(c + 1) % n], LEFT)).unwrap();
                s.glue(Slot::new(cell[r][c], TOP), Slot::new(cell[(r + 1) % n][c], BOTTOM)).unwrap();
            }
        }
        TorusGrid { surface: s, cell }
    }

    pub fn slot(&self, r: usize, c: usize, side: usize) -> Slot {
        Slot::new(self.cell[r][c], side)
    }
}

/// A sphere made of a north polygon, a south polygon and a ring of squares
/// around the equator. Ring cells whose name starts with `M` carry a mark of
/// the same name. Ring cell `k` lies east of cell `k - 1`.
pub struct SphereBelt {
    pub surface: CombSurface,
    pub north: FaceId,
    pub south: FaceId,
    pub ring: Vec<FaceId>,
    pub names: Vec<String>,
}

impl SphereBelt {
    pub fn new(cells: &[&str]) -> Self {
        let n = cells.len();
        let mut s = CombSurface::new();
        let north = s.add_face("N", n);
        let south = s.add_face("S", n);
        let ring: Vec<FaceId> = cells.iter().map(|c| s.add_face(*c, 4)).collect();
        for k in 0..n {
            s.glue(Slot::new(ring[k], RIGHT), Slot::new(ring[(k + 1) % n], LEFT)).unwrap();
            s.glue(Slot::new(ring[k], TOP), Slot::new(north, k)).unwrap();
            s.glue(Slot::new(ring[k], BOTTOM), Slot::new(south, n - 1 - k)).unwrap();
            if cells[k].starts_with('M') {
                s.add_mark(cells[k], ring[k]).unwrap();
            }
        }
        SphereBelt { surface: s, north, south, ring, names: cells.iter().map(|c| c.to_string()).collect() }
    }

    pub fn cell(&self, name: &str) -> FaceId {
        self.ring[self.index(name)]
    }

    pub fn index(&self, name: &str) -> usize {
        self.names.iter().position(|n| n == name).unwrap_or_else(|| panic!("no ring cell {name}"))
    }

    /// Side of the north polygon above a ring cell.
    pub fn north_side(&self, name: &str) -> Slot {
        Slot::new(self.north, self.index(name))
    }

    /// Side of the south polygon below a ring cell.
    pub fn south_side(&self, name: &str) -> Slot {
        Slot::new(self.south, self.ring.len() - 1 - self.index(name))
    }

    pub fn side(&self, name: &str, side: usize) -> Slot {
        Slot::new(self.cell(name), side)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_are_closed_surfaces() {
        let t = TorusGrid::new(3);
        t.surface.validate().unwrap();
        assert_eq!(t.surface.classify().genus, 1);
        let s = SphereBelt::new(&["M1", "E1", "M2", "E2"]);
        s.surface.validate().unwrap();
        assert_eq!(s.surface.euler_characteristic(), 2);
        assert_eq!(s.surface.marks().len(), 2);
    }
}
