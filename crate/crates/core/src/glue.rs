//! Gluing relative trisection diagrams along matching open books, and the
//! three regluings of a projective plane's neighbourhood.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::catalog::construct::unknotted_rp2_shadow;
use crate::combsurf::Slot;
use crate::complement::{build_complement, p0b3_selections, select_arcs, SelectionMode};
use crate::curves::{ClassTracker, Drawing};
use crate::diagrams::{Diagram, Family, Params, TrisectionDiagram};
use crate::error::{Error, Result};
use crate::invariants::snf::{solve, IntMatrix};
use crate::invariants::topology::binding_vanishes;
use crate::invariants::{euler_char, euler_char_closed, h1_closed, AbelianGroup};
use crate::openbook::monodromy_twist_vector;

/// Boundary circle `i` of the first diagram is glued to circle `map[i]` of
/// the second (circles in `boundary_circles` order). The gluing always
/// reverses orientation; base points are matched canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatching {
    pub map: Vec<usize>,
}

impl BoundaryMatching {
    pub fn identity(b: usize) -> Self {
        BoundaryMatching { map: (0..b).collect() }
    }

    fn check(&self, b: usize) -> Result<()> {
        let mut seen = vec![false; b];
        for &j in &self.map {
            if j >= b || std::mem::replace(&mut seen[j], true) {
                return Err(Error::Precondition(format!("{:?} is not a bijection of {b} circles", self.map)));
            }
        }
        if self.map.len() != b {
            return Err(Error::Precondition(format!("{:?} is not a bijection of {b} circles", self.map)));
        }
        Ok(())
    }
}

/// Planar page data of a validated diagram: (g, k, b).
fn planar(d: &Diagram) -> Result<(u32, u32, u32)> {
    let r = d.validate_relative();
    match r.params {
        Some(Params::Relative { g, k, p: 0, b }) => Ok((g, k, b)),
        Some(Params::Relative { p, .. }) => Err(Error::UnsupportedPage(p)),
        _ => Err(Error::NotValidated),
    }
}

/// Tags every boundary slot with the index of its circle so circles can be
/// found again after sides are split.
fn tag_circles(dr: &mut Drawing) -> usize {
    let circles = dr.surface().boundary_circles();
    for (i, c) in circles.iter().enumerate() {
        for sl in c {
            dr.set_label(*sl, format!("@{i}"));
        }
    }
    circles.len()
}

fn tagged_circles(dr: &Drawing, n: usize) -> Vec<Vec<Slot>> {
    let mut out = vec![Vec::new(); n];
    for c in dr.surface().boundary_circles() {
        let tag = dr.surface().label(c[0]).and_then(|l| l.strip_prefix('@')).and_then(|l| l.parse::<usize>().ok());
        if let Some(i) = tag {
            out[i] = c;
        }
    }
    out
}

/// Splits sides until `circle` has `len` sides.
fn lengthen(dr: &mut Drawing, n: usize, circle: usize, len: usize) -> Result<()> {
    loop {
        let c = &tagged_circles(dr, n)[circle];
        if c.len() >= len {
            return Ok(());
        }
        let s = c[0];
        let keep = dr.points_on(s).len();
        dr.split_boundary_side(s, keep)?;
    }
}

/// Draws the page arcs of all three families on one side. Each entry of
/// `ends` is one arc of a cut system of the α-page; the β and γ arcs are its
/// images slid off β and then γ, chosen by homology class.
fn page_arcs(dr: &mut Drawing, d: &Diagram, ends: &[(Slot, Slot)], tag: &str) -> Result<[Vec<String>; 3]> {
    let tracker = ClassTracker::new(dr);
    let fam: Vec<Vec<String>> = Family::ALL.iter().map(|f| d.family(*f).to_vec()).collect();
    let mut arcs: [Vec<String>; 3] = Default::default();
    for (j, (from, to)) in ends.iter().enumerate() {
        let name = format!("{tag}a{j}");
        let mut avoid = fam[0].clone();
        avoid.extend(arcs[0].iter().cloned());
        dr.draw_arc_avoiding(&name, &avoid, &[*from], &[*to])?;
        arcs[0].push(name);
    }
    for (f, g) in [(0usize, 1usize), (1, 2)] {
        let w = |dr: &Drawing, n: &str| -> Result<Vec<i64>> { Ok(tracker.of_curve(dr, dr.curve(n)?)) };
        let fw: Vec<Vec<i64>> = fam[f].iter().map(|n| w(dr, n)).collect::<Result<_>>()?;
        let gw: Vec<Vec<i64>> = fam[g].iter().map(|n| w(dr, n)).collect::<Result<_>>()?;
        let dot = |dr: &Drawing, x: &str, y: &str| -> Result<i64> { Ok(dr.algebraic_intersection(dr.curve(x)?, dr.curve(y)?)) };
        let m: Vec<Vec<i64>> = fam[g]
            .iter()
            .map(|gm| fam[f].iter().map(|fi| dot(dr, fi, gm)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        for (j, (from, to)) in ends.iter().enumerate() {
            let prev = arcs[f][j].clone();
            let rhs: Vec<BigInt> = fam[g].iter().map(|gm| dot(dr, &prev, gm).map(|v| BigInt::from(-v))).collect::<Result<_>>()?;
            let u = solve(&IntMatrix::from_rows(&m), &rhs)
                .ok_or_else(|| Error::CompletionFailed(format!("{prev} cannot be slid off the {} curves", Family::ALL[g].name())))?;
            let mut target = w(dr, &prev)?;
            for (i, ui) in u.iter().enumerate() {
                let ui = ui.to_i64().expect("small");
                for (t, x) in target.iter_mut().zip(&fw[i]) {
                    *t += ui * x;
                }
            }
            let name = format!("{tag}{}{j}", ["a", "b", "c"][g]);
            let mut avoid = fam[g].clone();
            avoid.extend(arcs[g].iter().cloned());
            dr.draw_arc_in_class(&name, &avoid, *from, *to, &target, &gw, &tracker)?;
            arcs[g].push(name);
        }
    }
    Ok(arcs)
}

fn order_seam(dr: &mut Drawing, b: usize, arcs: &[Vec<String>; 3], reverse: bool) -> Result<()> {
    let mut fam_of = BTreeMap::new();
    for (fi, names) in arcs.iter().enumerate() {
        for n in names {
            for p in dr.curve(n)?.points() {
                fam_of.insert(p, fi);
            }
        }
    }
    for c in tagged_circles(dr, b) {
        for s in c {
            let mut pts = dr.points_on(s);
            pts.sort_by_key(|p| fam_of.get(p).copied().unwrap_or(0));
            if reverse {
                pts.reverse();
            }
            dr.reorder_boundary_points(s, pts)?;
        }
    }
    Ok(())
}

/// The glued closed diagram; its genus is g1 + g2 + b - 1.
pub fn glue_relative(d1: &Diagram, d2: &Diagram, m: &BoundaryMatching) -> Result<TrisectionDiagram> {
    let (g1, k1, b) = planar(d1)?;
    let (g2, k2, b2) = planar(d2)?;
    if b != b2 {
        return Err(Error::PagesMismatch(format!("{b} vs {b2} bindings")));
    }
    let b = b as usize;
    m.check(b)?;
    if b > 3 {
        return Err(Error::CompletionFailed("pages with more than three bindings are not determined by homology".into()));
    }
    let t1 = monodromy_twist_vector(d1)?.values;
    let t2 = monodromy_twist_vector(d2)?.values;
    if (0..b).any(|i| t1[i] != -t2[m.map[i]]) {
        let pulled: Vec<i64> = (0..b).map(|i| t2[m.map[i]]).collect();
        return Err(Error::MonodromyMismatch(t1, pulled));
    }

    let (mut l, mut r) = (d1.drawing.clone(), d2.drawing.clone());
    tag_circles(&mut l);
    tag_circles(&mut r);
    for i in 0..b {
        let want = tagged_circles(&l, b)[i].len().max(tagged_circles(&r, b)[m.map[i]].len()).max(b);
        lengthen(&mut l, b, i, want)?;
        lengthen(&mut r, b, m.map[i], want)?;
    }
    let (cl, cr) = (tagged_circles(&l, b), tagged_circles(&r, b));
    // side k of a left circle meets side -k of the matched right circle
    let partner = |i: usize, k: usize| {
        let n = cl[i].len();
        cr[m.map[i]][(n - k) % n]
    };
    let ends_l: Vec<(Slot, Slot)> = (1..b).map(|j| (cl[0][j - 1], cl[j][0])).collect();
    let ends_r: Vec<(Slot, Slot)> = (1..b).map(|j| (partner(0, j - 1), partner(j, 0))).collect();
    let arcs_l = page_arcs(&mut l, d1, &ends_l, "page_")?;
    let arcs_r = page_arcs(&mut r, d2, &ends_r, "page_")?;
    // along the seam the families come in order on the left, reversed on the right
    order_seam(&mut l, b, &arcs_l, false)?;
    order_seam(&mut r, b, &arcs_r, true)?;

    let prefix = "r_";
    let map = l.absorb(&r, prefix, |n| format!("{prefix}{n}"))?;
    let ms = |s: Slot| Slot::new(map[&s.face], s.side);
    for i in 0..b {
        for k in 0..cl[i].len() {
            l.glue_boundary(cl[i][k], ms(partner(i, k)))?;
        }
    }
    let mut out = Diagram::new(l);
    for f in Family::ALL {
        let fi = f.index();
        let mut names = d1.family(f).to_vec();
        names.extend(d2.family(f).iter().map(|n| format!("{prefix}{n}")));
        for j in 0..b - 1 {
            let name = format!("{}_glue{j}", f.name());
            out.drawing.join_arcs(&arcs_l[fi][j], &format!("{prefix}{}", arcs_r[fi][j]), &name)?;
            names.push(name);
        }
        out.curves[fi] = names;
    }
    let report = out.validate_trisection();
    let expect_g = g1 + g2 + b as u32 - 1;
    let expect_k = k1 + k2 - (b as u32 - 1);
    match report.params {
        Some(Params::Closed { g, k }) if g == expect_g && k.iter().all(|x| *x == expect_k) => Ok(out),
        _ => Err(Error::CompletionFailed(report.to_string())),
    }
}

/// How the b - 1 missing curves of each family are found.
#[derive(Clone, Debug)]
pub enum Completion {
    /// Page arcs are transported across both sides and joined.
    Auto,
    /// A finished diagram on the glued surface, supplied by the caller.
    Explicit(Box<Diagram>),
}

pub fn glue_with(d1: &Diagram, d2: &Diagram, m: &BoundaryMatching, completion: &Completion) -> Result<TrisectionDiagram> {
    let Completion::Explicit(given) = completion else {
        return glue_relative(d1, d2, m);
    };
    let (g1, k1, b) = planar(d1)?;
    let (g2, k2, b2) = planar(d2)?;
    if b != b2 {
        return Err(Error::PagesMismatch(format!("{b} vs {b2} bindings")));
    }
    m.check(b as usize)?;
    let t1 = monodromy_twist_vector(d1)?.values;
    let t2 = monodromy_twist_vector(d2)?.values;
    if (0..b as usize).any(|i| t1[i] != -t2[m.map[i]]) {
        let pulled: Vec<i64> = (0..b as usize).map(|i| t2[m.map[i]]).collect();
        return Err(Error::MonodromyMismatch(t1, pulled));
    }
    let report = given.validate_trisection();
    let (eg, ek) = (g1 + g2 + b - 1, k1 + k2 - (b - 1));
    match report.params {
        Some(Params::Closed { g, k }) if g == eg && k.iter().all(|x| *x == ek) => Ok((**given).clone()),
        Some(p) => Err(Error::CompletionFailed(format!("explicit completion is {p}, expected (g,k)=({eg},{ek})"))),
        None => Err(Error::CompletionFailed(report.to_string())),
    }
}

/// Boundary circles of a complement that meet none of the stabilization bands.
pub fn band_free_circles(d: &Diagram) -> Vec<usize> {
    let s = d.drawing.surface();
    s.boundary_circles()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.iter().all(|sl| !s.face(sl.face).name.starts_with("band_")))
        .map(|(i, _)| i)
        .collect()
}

/// Which regluing of the projective plane's neighbourhood an output is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TwistLabel {
    Trivial,
    Tau,
    Sigma,
}

impl TwistLabel {
    pub fn name(self) -> &'static str {
        match self {
            TwistLabel::Trivial => "trivial",
            TwistLabel::Tau => "tau",
            TwistLabel::Sigma => "sigma",
        }
    }
}

#[derive(Clone, Debug)]
pub struct PriceTwistOutput {
    pub label: TwistLabel,
    /// Binding of the complement that receives the disk-bounding binding of the neighbourhood.
    pub target: String,
    pub matching: BoundaryMatching,
    pub diagram: TrisectionDiagram,
    pub h1: AbelianGroup,
    pub euler: i64,
}

#[derive(Clone, Debug)]
pub struct PriceTwistResult {
    pub complement: Diagram,
    pub neighbourhood: Diagram,
    pub outputs: Vec<PriceTwistOutput>,
    /// Targets for which no gluing exists, with the reason.
    pub unreached: Vec<(String, String)>,
}

impl PriceTwistResult {
    pub fn get(&self, l: TwistLabel) -> Option<&PriceTwistOutput> {
        self.outputs.iter().find(|o| o.label == l)
    }
}

impl fmt::Display for PriceTwistResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outputs {
            let p = o.diagram.parameters().map(|p| p.to_string()).unwrap_or_default();
            writeln!(f, "{}: S_-1 -> {} {:?} {p} H1 = {} chi = {}", o.label.name(), o.target, o.matching.map, o.h1, o.euler)?;
        }
        for (t, why) in &self.unreached {
            writeln!(f, "unreached: S_-1 -> {t}: {why}")?;
        }
        Ok(())
    }
}

/// All bijections of `0..b` sending `from` to `to`, in lexicographic order.
fn maps_through(b: usize, from: usize, to: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..b).collect();
    loop {
        if perm[from] == to {
            out.push(perm.clone());
        }
        // next permutation
        let Some(i) = (1..b).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..b).rev().find(|&j| perm[j] > perm[i - 1]).expect("exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

/// Shadow of the unknotted projective plane whose complement is the
/// neighbourhood of a projective plane with Euler number `euler`.
fn neighbourhood_shadow(euler: i64) -> Result<Diagram> {
    let (plus, _) = unknotted_rp2_shadow()?;
    Ok(if euler > 0 { plus.mirrored() } else { plus })
}

/// Relative trisection of the neighbourhood of a projective plane with the
/// given Euler number.
pub fn rp2_neighbourhood(euler: i64) -> Result<Diagram> {
    let shadow = neighbourhood_shadow(euler)?;
    build_complement(&shadow, &select_arcs(&shadow, &SelectionMode::AutoP0B3)?)
}

struct Regluings {
    comp: Diagram,
    nbhd: Diagram,
    meridian: usize,
    labels: Vec<String>,
    found: Vec<(usize, BoundaryMatching, TrisectionDiagram)>,
    unreached: Vec<(String, String)>,
}

/// Sends the null-homologous binding of `nbhd` to each binding of `comp` in turn.
fn reglue_all(comp: Diagram, nbhd: Diagram) -> Result<Regluings> {
    let vanish = binding_vanishes(&nbhd)?;
    let disk: Vec<usize> = (0..vanish.len()).filter(|i| vanish[*i]).collect();
    let [s] = disk[..] else {
        return Err(Error::AmbiguousLabeling(format!("neighbourhood has null-homologous bindings {disk:?}")));
    };
    let meridian = match band_free_circles(&comp)[..] {
        [m] => m,
        ref v => return Err(Error::AmbiguousLabeling(format!("band-free circles {v:?}"))),
    };
    let tc = monodromy_twist_vector(&comp)?;
    let tn = monodromy_twist_vector(&nbhd)?;
    let b = tc.values.len();
    let mut found = Vec::new();
    let mut unreached = Vec::new();
    for target in 0..b {
        let mut why = format!("twists {tc} and {tn} admit no matching");
        let mut hit = None;
        for map in maps_through(b, target, s) {
            if (0..b).any(|i| tc.values[i] != -tn.values[map[i]]) {
                continue;
            }
            let m = BoundaryMatching { map };
            match glue_relative(&comp, &nbhd, &m) {
                Ok(g) => {
                    hit = Some((m, g));
                    break;
                }
                Err(e) => why = e.to_string(),
            }
        }
        match hit {
            Some((m, g)) => found.push((target, m, g)),
            None => unreached.push((tc.labels[target].clone(), why)),
        }
    }
    Ok(Regluings { comp, nbhd, meridian, labels: tc.labels, found, unreached })
}

/// Builds the complement of an RP² shadow and reglues the neighbourhood in
/// every way the open books allow. Arc selections are tried in search order
/// and the first pair reaching the most bindings is kept.
pub fn price_twist_pipeline(d: &Diagram, euler: i64) -> Result<PriceTwistResult> {
    if euler.abs() != 2 {
        return Err(Error::Precondition(format!("Euler number {euler} is not +-2")));
    }
    match d.euler_number {
        Some(e) if e != euler => return Err(Error::Precondition(format!("shadow has Euler number {e}, not {euler}"))),
        _ => {}
    }
    match d.validate_shadow().params {
        Some(Params::Shadow { c: 1, b: 2, .. }) => {}
        Some(p) => return Err(Error::Precondition(format!("shadow {p} is not a (1,2) bridge projective plane"))),
        None => return Err(Error::NotValidated),
    }
    let ns = neighbourhood_shadow(euler)?;
    let mut best: Option<Regluings> = None;
    'search: for cs in p0b3_selections(d)? {
        let comp = build_complement(d, &cs)?;
        for nsel in p0b3_selections(&ns)? {
            let r = reglue_all(comp.clone(), build_complement(&ns, &nsel)?)?;
            let has_meridian = r.found.iter().any(|f| f.0 == r.meridian);
            if has_meridian && best.as_ref().is_none_or(|b| r.found.len() > b.found.len()) {
                let full = r.unreached.is_empty();
                best = Some(r);
                if full {
                    break 'search;
                }
            }
        }
    }
    let Some(r) = best else {
        return Err(Error::CompletionFailed("no arc selection lets the meridian be reglued".into()));
    };
    let chi = euler_char(&r.comp)? + euler_char(&r.nbhd)?;

    let mut outputs = Vec::new();
    for (target, matching, diagram) in r.found {
        let h1 = h1_closed(&diagram)?;
        let euler = match diagram.parameters()? {
            Params::Closed { g, k } => euler_char_closed(g, k),
            _ => return Err(Error::NotValidated),
        };
        if euler != chi {
            return Err(Error::CompletionFailed(format!("glued Euler characteristic {euler}, expected {chi}")));
        }
        let label = if target == r.meridian { TwistLabel::Trivial } else { TwistLabel::Sigma };
        outputs.push(PriceTwistOutput { label, target: r.labels[target].clone(), matching, diagram, h1, euler });
    }
    let base = outputs.iter().find(|o| o.label == TwistLabel::Trivial).map(|o| o.h1.clone()).expect("meridian reached");
    let differ: Vec<usize> = (0..outputs.len()).filter(|i| outputs[*i].h1 != base).collect();
    match differ[..] {
        [i] => outputs[i].label = TwistLabel::Tau,
        // the unreached target may be the one that changes H1
        [] if !r.unreached.is_empty() => {}
        _ => {
            let groups: Vec<String> = outputs.iter().map(|o| format!("{}: {}", o.target, o.h1)).collect();
            return Err(Error::AmbiguousLabeling(groups.join(", ")));
        }
    }
    outputs.sort_by_key(|o| o.label);
    Ok(PriceTwistResult { complement: r.comp, neighbourhood: r.nbhd, outputs, unreached: r.unreached })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::construct::unknotted_rp2_shadow;
    use crate::complement::{simulate, ArcSelection};

    fn complement() -> Diagram {
        let (d, _) = unknotted_rp2_shadow().unwrap();
        let sel = ArcSelection { used: [vec!["a12".into()], vec!["b23".into()], vec!["c13".into()]], protected: None };
        simulate(&d, &sel).unwrap().0
    }

    #[test]
    fn price_twist_unknotted() {
        let (plus, _) = unknotted_rp2_shadow().unwrap();
        let r = price_twist_pipeline(&plus.mirrored(), -2).unwrap();
        let t = r.get(TwistLabel::Trivial).unwrap();
        assert_eq!(t.target, "M4");
        assert!(t.h1.is_trivial());
        assert_eq!(r.get(TwistLabel::Tau).unwrap().h1.to_string(), "Z/2");
        assert!(r.get(TwistLabel::Sigma).is_none());
        assert_eq!(r.unreached.len(), 1);
        for o in &r.outputs {
            assert_eq!(o.euler, 2);
            assert_eq!(o.diagram.parameters().unwrap(), Params::Closed { g: 6, k: [2, 2, 2] });
        }
        assert!(matches!(price_twist_pipeline(&plus, -2), Err(Error::Precondition(_))));
    }

    #[test]
    fn glue_with_mirror() {
        let c = complement();
        let n = c.mirrored();
        let mut groups = Vec::new();
        for map in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let m = BoundaryMatching { map: map.to_vec() };
            match glue_relative(&c, &n, &m) {
                Ok(d) => {
                    assert_eq!(d.parameters().unwrap(), Params::Closed { g: 6, k: [2, 2, 2] });
                    groups.push(h1_closed(&d).unwrap().to_string());
                }
                Err(e) => assert!(matches!(e, Error::MonodromyMismatch(..)), "{e}"),
            }
        }
        assert_eq!(groups, ["0", "Z/2"]);
    }

    #[test]
    fn permutations_through_a_point() {
        assert_eq!(maps_through(3, 0, 2), vec![vec![2, 0, 1], vec![2, 1, 0]]);
    }
}
