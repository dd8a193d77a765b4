//! Trisection, relative trisection and shadow diagrams, with validators.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;

use crate::combsurf::FaceId;
use crate::curves::{Drawing, End};
use crate::error::{Error, Result};
use crate::invariants::snf::{smith_normal_form, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Alpha,
    Beta,
    Gamma,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Alpha, Family::Beta, Family::Gamma];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["alpha", "beta", "gamma"][self.index()]
    }

    pub fn arc_name(self) -> &'static str {
        ["s_alpha", "s_beta", "s_gamma"][self.index()]
    }

    pub fn parse(s: &str) -> Option<(Family, bool)> {
        Family::ALL.into_iter().find_map(|f| {
            if s == f.name() {
                Some((f, false))
            } else if s == f.arc_name() {
                Some((f, true))
            } else {
                None
            }
        })
    }

    /// The two other families, in cyclic order.
    pub fn others(self) -> (Family, Family) {
        let i = self.index();
        (Family::ALL[(i + 1) % 3], Family::ALL[(i + 2) % 3])
    }
}

/// Curves on one drawing grouped into the three families, plus shadow arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub drawing: Drawing,
    pub curves: [Vec<String>; 3],
    pub arcs: [Vec<String>; 3],
    /// Normal Euler number of the surface a shadow describes, when known.
    pub euler_number: Option<i64>,
}

pub type TrisectionDiagram = Diagram;
pub type RelativeTrisectionDiagram = Diagram;
pub type ShadowDiagram = Diagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Params {
    Closed { g: u32, k: [u32; 3] },
    Relative { g: u32, k: u32, p: u32, b: u32 },
    Shadow { g: u32, k: u32, c: u32, b: u32 },
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Closed { g, k } if k[0] == k[1] && k[1] == k[2] => write!(f, "(g,k)=({g},{})", k[0]),
            Params::Closed { g, k } => write!(f, "(g;k1,k2,k3)=({g};{},{},{})", k[0], k[1], k[2]),
            Params::Relative { g, k, p, b } => write!(f, "(g,k,p,b)=({g},{k},{p},{b})"),
            Params::Shadow { g, k, c, b } => write!(f, "(g,k;c,b)=({g},{k};{c},{b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
    pub params: Option<Params>,
}

impl Report {
    fn new() -> Self {
        Report { checks: Vec::new(), params: None }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
        passed
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Errors with the first failure if any check failed.
    pub fn into_result(self) -> Result<Report> {
        match self.failures().first() {
            Some(c) => Err(Error::ValidationFailed(format!("{}: {}", c.name, c.detail))),
            None => Ok(self),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail)?;
        }
        match self.params {
            Some(p) => write!(f, "parameters {p}"),
            None => write!(f, "parameters unknown"),
        }
    }
}

impl Diagram {
    pub fn new(drawing: Drawing) -> Self {
        Diagram { drawing, curves: Default::default(), arcs: Default::default(), euler_number: None }
    }

    /// Orientation reversal: the drawing is reflected and the Euler number of
    /// a described surface changes sign.
    pub fn mirrored(&self) -> Diagram {
        Diagram { drawing: self.drawing.mirrored(), euler_number: self.euler_number.map(|e| -e), ..self.clone() }
    }

    pub fn family(&self, f: Family) -> &[String] {
        &self.curves[f.index()]
    }

    pub fn shadow(&self, f: Family) -> &[String] {
        &self.arcs[f.index()]
    }

    pub fn is_shadow(&self) -> bool {
        self.arcs.iter().any(|a| !a.is_empty())
    }

    pub fn is_relative(&self) -> bool {
        self.drawing.surface().boundary_slots().next().is_some()
    }

    /// Algebraic intersection matrix between two families.
    pub fn intersection_matrix(&self, a: Family, b: Family) -> Result<Vec<Vec<i64>>> {
        let d = &self.drawing;
        let xs = d.by_names(self.family(a))?;
        let ys = d.by_names(self.family(b))?;
        Ok(xs.iter().map(|x| ys.iter().map(|y| d.algebraic_intersection(x, y)).collect()).collect())
    }

    /// Validates the family as a cut system whose complement has genus `p`
    /// and `b + 2n` boundary circles (`n` the number of curves).
    pub fn validate_cut_system(&self, f: Family, p: u32, b: u32, report: &mut Report) -> bool {
        let names = self.family(f);
        let d = &self.drawing;
        let mut ok = true;
        for n in names {
            match d.curve(n) {
                Ok(c) if c.closed => {}
                _ => ok &= report.check(format!("{} curve {n}", f.name()), false, "missing or not closed"),
            }
        }
        if !ok {
            return false;
        }
        if let Err(e) = d.check_disjoint(names) {
            return report.check(format!("{} disjoint", f.name()), false, e.to_string());
        }
        let cut = match d.cut_along_system(names) {
            Ok(c) => c.surface.classify(),
            Err(e) => return report.check(format!("{} cut", f.name()), false, e.to_string()),
        };
        let want = (1, p, b + 2 * names.len() as u32);
        let got = (cut.components, cut.genus, cut.boundary_count);
        report.check(
            format!("{} cut system", f.name()),
            got == want,
            format!("cut surface has {} component(s), genus {}, {} boundary circles", got.0, got.1, got.2),
        )
    }

    /// `n - rank` of the pairwise intersection matrix, when its nonzero
    /// invariant factors are all 1.
    fn pair_nullity(&self, a: Family, b: Family, report: &mut Report) -> Option<u32> {
        let m = match self.intersection_matrix(a, b) {
            Ok(m) => m,
            Err(e) => {
                report.check(format!("{}/{} intersections", a.name(), b.name()), false, e.to_string());
                return None;
            }
        };
        let n = m.len();
        if n == 0 {
            return Some(0);
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(&m));
        let unit = snf.invariant_factors().iter().all(|d| d.is_one());
        let label = format!("{}/{} pairing", a.name(), b.name());
        if !report.check(label, unit, format!("invariant factors {:?}", snf.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>())) {
            return None;
        }
        Some((n - snf.rank) as u32)
    }

    /// Closed trisection diagram: cut systems and homological k.
    pub fn validate_trisection(&self) -> Report {
        let mut r = Report::new();
        let s = self.drawing.surface();
        let class = s.classify();
        let shape_ok = r.check("surface", class.components == 1 && class.boundary_count == 0, format!("{class}"));
        let g = class.genus;
        let mut ok = shape_ok;
        for f in Family::ALL {
            ok &= r.check(format!("{} count", f.name()), self.family(f).len() == g as usize, format!("{} curves, genus {g}", self.family(f).len()));
        }
        if !ok {
            return r;
        }
        for f in Family::ALL {
            ok &= self.validate_cut_system(f, 0, 0, &mut r);
        }
        if !ok {
            return r;
        }
        let mut k = [0u32; 3];
        for (i, f) in Family::ALL.into_iter().enumerate() {
            match self.pair_nullity(f, f.others().0, &mut r) {
                Some(n) => k[i] = n,
                None => return r,
            }
        }
        r.check("sectors", true, format!("k = {:?} (homological necessary conditions only)", k));
        r.params = Some(Params::Closed { g, k });
        r
    }

    /// Relative trisection diagram: derives (g,k,p,b).
    pub fn validate_relative(&self) -> Report {
        let mut r = Report::new();
        let class = self.drawing.surface().classify();
        let (g, b) = (class.genus, class.boundary_count);
        if !r.check("surface", class.components == 1 && b > 0, format!("{class}")) {
            return r;
        }
        let counts: Vec<usize> = Family::ALL.iter().map(|f| self.family(*f).len()).collect();
        if !r.check("curve counts", counts.iter().all(|c| *c == counts[0]) && counts[0] <= g as usize, format!("{counts:?}")) {
            return r;
        }
        let p = g - counts[0] as u32;
        let mut ok = true;
        for f in Family::ALL {
            ok &= self.validate_cut_system(f, p, b, &mut r);
        }
        if !ok {
            return r;
        }
        let mut ks = Vec::new();
        for f in Family::ALL {
            let (a, _) = f.others();
            match self.pair_nullity(f, a, &mut r) {
                Some(l) => ks.push(l + 2 * p + b - 1),
                None => return r,
            }
        }
        if !r.check("sectors", ks.iter().all(|k| *k == ks[0]), format!("k per sector {ks:?} (homological necessary conditions only)")) {
            return r;
        }
        r.params = Some(Params::Relative { g, k: ks[0], p, b });
        r
    }

    /// Shadow diagram: arcs, loop counts and bridge parameters.
    pub fn validate_shadow(&self) -> Report {
        let mut r = self.validate_trisection();
        let Some(Params::Closed { g, k }) = r.params else { return r };
        let d = &self.drawing;
        let marks: BTreeSet<FaceId> = d.surface().marks().values().copied().collect();
        let nb = marks.len();
        if !r.check("bridge points", nb % 2 == 0 && nb > 0, format!("{nb} marks")) {
            return r;
        }
        let b = (nb / 2) as u32;
        let mut ends: [Vec<(FaceId, FaceId)>; 3] = Default::default();
        for f in Family::ALL {
            let names = self.shadow(f);
            let mut used = BTreeMap::new();
            let mut ok = r.check(format!("{} count", f.arc_name()), names.len() == b as usize, format!("{} arcs, b = {b}", names.len()));
            for n in names {
                let Ok(c) = d.curve(n) else {
                    ok &= r.check(format!("{} arc {n}", f.arc_name()), false, "missing");
                    continue;
                };
                let (first, last) = (c.chords[0], *c.chords.last().expect("nonempty"));
                if c.closed || first.a != End::Mark || last.b != End::Mark || first.face == last.face {
                    ok &= r.check(format!("{} arc {n}", f.arc_name()), false, "must join two distinct bridge points");
                    continue;
                }
                *used.entry(first.face).or_insert(0) += 1;
                *used.entry(last.face).or_insert(0) += 1;
                ends[f.index()].push((first.face, last.face));
            }
            ok &= r.check(
                format!("{} endpoints", f.arc_name()),
                used.len() == nb && used.values().all(|u| *u == 1),
                "every bridge point is an endpoint exactly once",
            );
            if ok {
                let disjoint = d.check_disjoint(names);
                r.check(format!("{} disjoint", f.arc_name()), disjoint.is_ok(), disjoint.err().map(|e| e.to_string()).unwrap_or_default());
                let mut all: Vec<String> = names.to_vec();
                all.extend(self.family(f).iter().cloned());
                let avoid = d.check_disjoint(&all);
                r.check(format!("{} avoids {}", f.arc_name(), f.name()), avoid.is_ok(), avoid.err().map(|e| e.to_string()).unwrap_or_default());
            }
        }
        if !r.passed() {
            return r;
        }
        let loops: Vec<usize> = Family::ALL
            .iter()
            .map(|f| {
                let (a, _) = f.others();
                count_loops(&ends[f.index()], &ends[a.index()])
            })
            .collect();
        if !r.check("loop counts", loops.iter().all(|l| *l == loops[0]), format!("{loops:?}")) {
            return r;
        }
        let c = loops[0] as u32;
        if !r.check("balanced", k[0] == k[1] && k[1] == k[2], format!("k = {k:?}")) {
            return r;
        }
        r.check("surface", true, format!("chi(S) = 3c - b = {}", 3 * c as i64 - b as i64));
        r.params = Some(Params::Shadow { g, k: k[0], c, b });
        r
    }

    /// Validates according to the diagram's kind.
    pub fn validate(&self) -> Report {
        if self.is_shadow() {
            self.validate_shadow()
        } else if self.is_relative() {
            self.validate_relative()
        } else {
            self.validate_trisection()
        }
    }

    pub fn parameters(&self) -> Result<Params> {
        let r = self.validate();
        match (r.passed(), r.params) {
            (true, Some(p)) => Ok(p),
            _ => Err(Error::NotValidated),
        }
    }
}

/// Number of cycles in the graph whose edges are the arcs of two families.
fn count_loops(a: &[(FaceId, FaceId)], b: &[(FaceId, FaceId)]) -> usize {
    let mut idx: BTreeMap<FaceId, usize> = BTreeMap::new();
    for (x, y) in a.iter().chain(b) {
        for v in [x, y] {
            let n = idx.len();
            idx.entry(*v).or_insert(n);
        }
    }
    let mut uf = crate::combsurf::UnionFind::new(idx.len());
    for (x, y) in a.iter().chain(b) {
        uf.union(idx[x], idx[y]);
    }
    let roots: BTreeSet<usize> = (0..idx.len()).map(|i| uf.find(i)).collect();
    roots.len()
}
