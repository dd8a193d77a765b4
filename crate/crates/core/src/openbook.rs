//! Open book on the boundary of a relative trisection: pages, boundary twist
//! vectors for planar pages, and the Seifert fibred spaces they bound.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::combsurf::{CombSurface, Slot};
use crate::curves::{CohomologyFrame, SubSide};
use crate::diagrams::{Diagram, Family, Params};
use crate::error::{Error, Result};
use crate::invariants::snf::{kernel_basis, solve, IntMatrix};
use crate::invariants::AbelianGroup;

/// Boundary Dehn twist exponents, one per binding; right-handed is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistVector {
    pub values: Vec<i64>,
    pub labels: Vec<String>,
}

impl fmt::Display for TwistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().zip(&self.values).map(|(l, v)| format!("{l}:{v:+}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Glues a disk into every boundary circle of `s` accepted by `keep`.
pub fn cap_circles(s: &mut CombSurface, keep: impl Fn(&[Slot]) -> bool) -> Result<()> {
    for circle in s.boundary_circles() {
        if !keep(&circle) {
            continue;
        }
        let n = circle.len();
        let cap = s.add_face("cap", n);
        for k in 0..n {
            s.glue(Slot::new(cap, k), circle[(n - k) % n])?;
        }
    }
    Ok(())
}

/// Σ surgered along one family: the page between the other two sectors.
pub fn extract_page(d: &Diagram, f: Family) -> Result<CombSurface> {
    let names = d.family(f);
    let idx: Vec<usize> = names
        .iter()
        .map(|n| d.drawing.curves().iter().position(|c| &c.name == n).ok_or_else(|| Error::MalformedCurve(n.clone(), "missing".into())))
        .collect::<Result<_>>()?;
    let cut = d.drawing.refine(&idx, true)?;
    let mut s = cut.surface.clone();
    let on_cut = |sl: &Slot| matches!(cut.regions[sl.face.0 as usize].sides[sl.side], SubSide::Chord { .. });
    cap_circles(&mut s, |c| c.iter().all(on_cut))?;
    Ok(s)
}

/// All three pages, after checking the diagram and that they agree.
pub fn pages(d: &Diagram) -> Result<[CombSurface; 3]> {
    let report = d.validate_relative();
    if !report.passed() {
        return Err(Error::NotValidated);
    }
    let ps = [extract_page(d, Family::Alpha)?, extract_page(d, Family::Beta)?, extract_page(d, Family::Gamma)?];
    let cls: Vec<_> = ps.iter().map(|p| p.classify()).collect();
    if cls.iter().any(|c| *c != cls[0]) {
        return Err(Error::InconsistentPages(format!("{cls:?}")));
    }
    Ok(ps)
}

/// Names for boundary circles: the distinct slot labels on each, joined.
pub fn binding_labels(s: &CombSurface, circles: &[Vec<Slot>]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for (i, c) in circles.iter().enumerate() {
        let set: std::collections::BTreeSet<&str> = c.iter().filter_map(|sl| s.label(*sl)).collect();
        let mut name = set.into_iter().collect::<Vec<_>>().join("+");
        if name.is_empty() || out.contains(&name) {
            name = format!("S{i}");
        }
        out.push(name);
    }
    out
}

/// Twist exponents of the monodromy around each boundary circle of a planar
/// page.
///
/// Arcs of the α-page are carried across the three handlebodies by sliding over
/// α, then β, then γ curves, keeping their ends fixed on the boundary. Only
/// homology classes rel the endpoints are tracked; for planar pages these
/// determine the boundary twists.
pub fn monodromy_twist_vector(d: &Diagram) -> Result<TwistVector> {
    let report = d.validate_relative();
    let Some(Params::Relative { p, b, .. }) = report.params else {
        return Err(Error::NotValidated);
    };
    if p != 0 {
        return Err(Error::UnsupportedPage(p));
    }
    let mut dr = d.drawing.clone();
    let circles = dr.surface().boundary_circles();
    let labels = binding_labels(dr.surface(), &circles);
    let b = b as usize;
    if b == 1 {
        return Ok(TwistVector { values: vec![0], labels });
    }
    let alpha = d.family(Family::Alpha).to_vec();
    let mut pairs: Vec<(usize, usize)> = (1..b).map(|j| (0, j)).collect();
    if b >= 3 {
        pairs.push((1, 2));
    }
    let mut arcs = Vec::new();
    for (k, (i, j)) in pairs.iter().enumerate() {
        let name = format!("page_arc_{k}");
        dr.draw_arc_avoiding(&name, &alpha, &circles[*i], &circles[*j])?;
        arcs.push(name);
    }
    let mut bd = Vec::new();
    for (i, c) in circles.iter().enumerate() {
        let name = format!("binding_{i}");
        dr.boundary_parallel(c[0], &name)?;
        bd.push(name);
    }

    let fam: Vec<Vec<String>> = Family::ALL.iter().map(|f| d.family(*f).to_vec()).collect();
    let all: Vec<String> = fam.iter().flatten().cloned().collect();
    let offset = [0, fam[0].len(), fam[0].len() + fam[1].len()];
    let n = all.len();
    let dot = |x: &str, y: &str| -> Result<i64> { Ok(dr.algebraic_intersection(dr.curve(x)?, dr.curve(y)?)) };
    let mut cc = vec![vec![0i64; n]; n];
    for x in 0..n {
        for y in 0..n {
            cc[x][y] = dot(&all[x], &all[y])?;
        }
    }

    let frame = CohomologyFrame::absolute(&dr);
    let coords = |name: &str| -> Result<Vec<i64>> {
        let c = dr.curve(name)?;
        frame.coords(&dr.cochain_on(c, &frame.edges)).ok_or_else(|| Error::TransportFailed(format!("{name} has no class")))
    };
    let curve_coords: Vec<Vec<i64>> = all.iter().map(|x| coords(x)).collect::<Result<_>>()?;
    let bd_coords: Vec<Vec<i64>> = bd.iter().map(|x| coords(x)).collect::<Result<_>>()?;
    let r = frame.rank();
    let na = fam[0].len();

    // unknowns: t (b entries), then one block of α coefficients per arc
    let cols = b + arcs.len() * na;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<i64> = Vec::new();
    for (k, arc) in arcs.iter().enumerate() {
        let ax: Vec<i64> = all.iter().map(|y| dot(arc, y)).collect::<Result<_>>()?;
        let mut c = vec![0i64; n];
        for (from, to) in [(0usize, 1usize), (1, 2), (2, 0)] {
            let pair = |c: &[i64], y: usize| ax[y] + (0..n).map(|x| c[x] * cc[x][y]).sum::<i64>();
            let m: Vec<Vec<i64>> = (0..fam[to].len())
                .map(|gm| (0..fam[from].len()).map(|fj| cc[offset[from] + fj][offset[to] + gm]).collect())
                .collect();
            let target: Vec<BigInt> = (0..fam[to].len()).map(|gm| BigInt::from(-pair(&c, offset[to] + gm))).collect();
            let u = solve(&IntMatrix::from_rows(&m), &target).ok_or_else(|| {
                Error::TransportFailed(format!("{arc} cannot be slid off the {} curves", Family::ALL[to].name()))
            })?;
            for (fj, v) in u.iter().enumerate() {
                c[offset[from] + fj] += v.to_i64().expect("small");
            }
        }
        let sgn: Vec<i64> = bd.iter().map(|x| dot(x, arc)).collect::<Result<_>>()?;
        for e in 0..r {
            let mut row = vec![0i64; cols];
            for i in 0..b {
                row[i] = sgn[i] * bd_coords[i][e];
            }
            for j in 0..na {
                row[b + k * na + j] = curve_coords[j][e];
            }
            rows.push(row);
            rhs.push((0..n).map(|x| c[x] * curve_coords[x][e]).sum());
        }
    }
    let m = IntMatrix::from_rows(&rows);
    let rhs: Vec<BigInt> = rhs.into_iter().map(BigInt::from).collect();
    let sol = solve(&m, &rhs).ok_or_else(|| Error::TransportFailed("difference is not a sum of boundary twists".into()))?;
    if kernel_basis(&m).iter().any(|v| v[..b].iter().any(|x| !x.is_zero())) {
        return Err(Error::TransportFailed("twists are not determined by the arcs".into()));
    }
    let values = sol[..b].iter().map(|x| x.to_i64().expect("small")).collect();
    Ok(TwistVector { values, labels })
}

/// First homology of the Seifert fibred space with three exceptional fibres
/// built from the twist vector (a, b, c).
pub fn seifert_h1(t: &[i64]) -> AbelianGroup {
    assert_eq!(t.len(), 3, "three bindings expected");
    let rel = vec![vec![t[0], 0, 0, 1], vec![0, t[1], 0, 1], vec![0, 0, t[2], 1], vec![1, 1, 1, 0]];
    AbelianGroup::cokernel(4, &rel)
}

/// Two twists around each binding, not all of the same sign.
pub fn check_quaternion_signature(t: &[i64]) -> bool {
    let mut s = t.to_vec();
    s.sort();
    s == [-2, 2, 2] || s == [-2, -2, 2]
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::construct::unknotted_rp2_shadow;
    use crate::complement::{simulate, ArcSelection};

    fn t1() -> Diagram {
        let (d, _) = unknotted_rp2_shadow().unwrap();
        let sel = ArcSelection { used: [vec!["a12".into()], vec!["b23".into()], vec!["c13".into()]], protected: None };
        simulate(&d, &sel).unwrap().0
    }

    #[test]
    fn pages_of_rp2_complement() {
        let ps = pages(&t1()).unwrap();
        let c = ps[0].classify();
        assert_eq!((c.genus, c.boundary_count, c.components), (0, 3, 1));
    }

    #[test]
    fn rp2_complement_twists() {
        let t = monodromy_twist_vector(&t1()).unwrap();
        eprintln!("{t}");
        assert!(check_quaternion_signature(&t.values), "{t}");
    }

    #[test]
    fn mirror_and_stabilized_twists() {
        use crate::catalog::construct::stabilize_thrice;
        use crate::complement::{select_arcs, SelectionMode};
        let m = t1();
        let m = Diagram { drawing: m.drawing.mirrored(), ..m };
        let t = monodromy_twist_vector(&m).unwrap();
        assert_eq!(t.values.iter().filter(|v| **v > 0).count(), 2, "{t}");
        let (mut d, sb) = unknotted_rp2_shadow().unwrap();
        stabilize_thrice(&mut d, &sb).unwrap();
        let sel = select_arcs(&d, &SelectionMode::AutoP0B3).unwrap();
        let out = simulate(&d, &sel).unwrap().0;
        let t = monodromy_twist_vector(&out).unwrap();
        assert!(check_quaternion_signature(&t.values), "{t}");
        assert_eq!(seifert_h1(&t.values).to_string(), "Z/2 + Z/2");
    }

    #[test]
    fn seifert_examples() {
        assert_eq!(seifert_h1(&[2, 2, -2]).to_string(), "Z/2 + Z/2");
        assert_eq!(seifert_h1(&[2, 2, 2]).order(), Some(BigInt::from(12)));
        assert_eq!(seifert_h1(&[1, 1, 1]).order(), Some(BigInt::from(3)));
        assert!(check_quaternion_signature(&[-2, 2, -2]));
        assert!(!check_quaternion_signature(&[2, 2, 2]));
    }
}
