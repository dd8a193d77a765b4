//! Handle decompositions read off relative trisection diagrams.

use std::collections::VecDeque;
use std::fmt;

use crate::curves::{Drawing, Guide, SubSide};
use crate::diagrams::{Diagram, Family, Params};
use crate::error::{Error, Result};
use crate::invariants::euler_char_relative;

/// Disjoint, homologous up to sign, and cobounding an annulus.
pub fn are_parallel(dr: &Drawing, x: &str, y: &str) -> Result<bool> {
    let (cx, cy) = (dr.curve(x)?, dr.curve(y)?);
    if dr.geometric_crossings(cx, cy) > 0 {
        return Ok(false);
    }
    let (hx, hy) = (dr.homology_class(cx), dr.homology_class(cy));
    let neg: Vec<i64> = hy.iter().map(|v| -v).collect();
    if hx != hy && hx != neg {
        return Ok(false);
    }
    let cut = dr.cut_along_system(&[x.to_string(), y.to_string()])?;
    Ok(cut.surface.classify_components().iter().any(|c| c.genus == 0 && c.boundary_count == 2))
}

/// How the curves of two families pair off once standard.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pairing {
    pub dual: Vec<(String, String)>,
    pub parallel: Vec<(String, String)>,
}

/// Each curve of `a` meets exactly one curve of `b` once, or is disjoint from
/// all of them and parallel to one; partners are distinct.
pub fn standard_pairing(d: &Diagram, a: Family, b: Family) -> Result<Option<Pairing>> {
    let dr = &d.drawing;
    let (xs, ys) = (d.family(a), d.family(b));
    let geo: Vec<Vec<usize>> = xs
        .iter()
        .map(|x| ys.iter().map(|y| Ok(dr.geometric_crossings(dr.curve(x)?, dr.curve(y)?))).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut used = vec![false; ys.len()];
    let mut out = Pairing::default();
    let mut lonely = Vec::new();
    for (i, row) in geo.iter().enumerate() {
        match row.iter().sum::<usize>() {
            0 => lonely.push(i),
            1 => {
                let j = row.iter().position(|v| *v == 1).expect("one crossing");
                if used[j] || geo.iter().map(|r| r[j]).sum::<usize>() != 1 {
                    return Ok(None);
                }
                used[j] = true;
                out.dual.push((xs[i].clone(), ys[j].clone()));
            }
            _ => return Ok(None),
        }
    }
    for i in lonely {
        let mut found = None;
        for j in 0..ys.len() {
            if !used[j] && geo.iter().all(|r| r[j] == 0) && are_parallel(dr, &xs[i], &ys[j])? {
                found = Some(j);
                break;
            }
        }
        let Some(j) = found else { return Ok(None) };
        used[j] = true;
        out.parallel.push((xs[i].clone(), ys[j].clone()));
    }
    Ok(Some(out))
}

/// One handle slide of the search: `mover` slid over `over` in `family`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideStep {
    pub family: Family,
    pub mover: String,
    pub over: String,
}

impl fmt::Display for SlideStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "slide {} {} over {}", self.family.name(), self.mover, self.over)
    }
}

/// Guides from each side of each chord of `mover` to the nearest chord of
/// `over`, avoiding the rest of `family`.
fn guides(dr: &Drawing, family: &[String], mover: &str, over: &str) -> Result<Vec<Guide>> {
    let cut = dr.cut_along_system(family)?;
    let index = |n: &str| dr.curves().iter().position(|c| c.name == n).expect("family curve");
    let (mi, oi) = (index(mover), index(over));
    let chord_in = |r: usize, ci: usize| {
        cut.regions[r].sides.iter().find_map(|s| match s {
            SubSide::Chord { curve, chord, .. } if *curve == ci => Some(*chord),
            _ => None,
        })
    };
    let mut out = Vec::new();
    for (start, region) in cut.regions.iter().enumerate() {
        for side in &region.sides {
            let SubSide::Chord { curve, chord: mover_chord, .. } = *side else { continue };
            if curve != mi {
                continue;
            }
            let mut prev: Vec<Option<(usize, (crate::combsurf::Slot, usize))>> = vec![None; cut.regions.len()];
            let mut seen = vec![false; cut.regions.len()];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(r) = queue.pop_front() {
                if let Some(over_chord) = chord_in(r, oi) {
                    let mut exits = Vec::new();
                    let mut cur = r;
                    while let Some((p, (slot, gap))) = prev[cur] {
                        let at = cut.gap_anchor(slot, gap).map_or(0, |a| dr.local_index(slot, a) + 1);
                        exits.push((slot, at));
                        cur = p;
                    }
                    exits.reverse();
                    out.push(Guide { mover_chord, exits, over_chord });
                    break;
                }
                for (sl, gap) in cut.pieces(r).collect::<Vec<_>>() {
                    let Some(p) = dr.surface().partner(sl) else { continue };
                    let n = cut.obstacle_count(sl);
                    let Some((r2, _)) = cut.region_of_piece(p, n - gap) else { continue };
                    if !seen[r2] {
                        seen[r2] = true;
                        prev[r2] = Some((r, (sl, gap)));
                        queue.push_back(r2);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn crossing_score(d: &Diagram) -> Result<usize> {
    let dr = &d.drawing;
    let mut total = 0;
    for x in d.family(Family::Alpha) {
        for y in d.family(Family::Beta) {
            total += dr.geometric_crossings(dr.curve(x)?, dr.curve(y)?);
        }
    }
    Ok(total)
}

/// Greedy handle slides among the α and among the β curves until the pair is
/// standard. Each step takes the first move (in family, mover, over, guide
/// order) that lowers the α/β crossing count the most.
pub fn standardize_alpha_beta(d: &Diagram, budget: usize) -> Result<(Diagram, Vec<SlideStep>)> {
    match d.validate_relative().params {
        Some(Params::Relative { .. }) => {}
        _ => return Err(Error::NotValidated),
    }
    let mut cur = d.clone();
    let mut log = Vec::new();
    loop {
        if standard_pairing(&cur, Family::Alpha, Family::Beta)?.is_some() {
            return Ok((cur, log));
        }
        let score = crossing_score(&cur)?;
        if log.len() >= budget {
            return Err(Error::NotStandardized(format!("budget of {budget} slides spent; {score} alpha/beta crossings remain")));
        }
        let mut best: Option<(usize, Diagram, SlideStep)> = None;
        for fam in [Family::Alpha, Family::Beta] {
            let other = if fam == Family::Alpha { Family::Beta } else { Family::Alpha };
            let names = cur.family(fam).to_vec();
            for mover in &names {
                for over in names.iter().filter(|o| *o != mover) {
                    for g in guides(&cur.drawing, &names, mover, over)? {
                        let mut next = cur.clone();
                        if next.drawing.handle_slide(&names, mover, over, &g).is_err() {
                            continue;
                        }
                        for y in cur.family(other) {
                            next.drawing.reduce_bigons(mover, y)?;
                        }
                        let s = crossing_score(&next)?;
                        if s < best.as_ref().map_or(score, |b| b.0) {
                            best = Some((s, next, SlideStep { family: fam, mover: mover.clone(), over: over.clone() }));
                        }
                    }
                }
            }
        }
        let Some((_, next, step)) = best else {
            return Err(Error::NotStandardized(format!("no slide lowers the {score} alpha/beta crossings")));
        };
        cur = next;
        log.push(step);
    }
}

/// Where a 1-handle of the decomposition comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DottedSource {
    /// The double of the i-th arc of a cut system of the α/β page.
    CutArcDouble(usize),
    ParallelPair(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandleStructure {
    pub counts: [u32; 4],
    pub dotted: Vec<DottedSource>,
    /// γ curves attached as 2-handles, each with the surface framing.
    pub attaching: Vec<String>,
    pub three_handle_sources: Vec<(String, String)>,
}

impl HandleStructure {
    pub fn euler_characteristic(&self) -> i64 {
        let [h0, h1, h2, h3] = self.counts.map(i64::from);
        h0 - h1 + h2 - h3
    }
}

impl fmt::Display for HandleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [h0, h1, h2, h3] = self.counts;
        writeln!(f, "handles: {h0} {h1} {h2} {h3}")?;
        for d in &self.dotted {
            match d {
                DottedSource::CutArcDouble(i) => writeln!(f, "1-handle: cut-arc double {i}")?,
                DottedSource::ParallelPair(a, b) => writeln!(f, "1-handle: parallel alpha/beta pair {a} {b}")?,
            }
        }
        for c in &self.attaching {
            writeln!(f, "2-handle: {c} surface framing")?;
        }
        for (a, c) in &self.three_handle_sources {
            writeln!(f, "3-handle: parallel alpha/gamma pair {a} {c}")?;
        }
        writeln!(f, "euler characteristic: {}", self.euler_characteristic())
    }
}

/// Handle counts (0- to 3-handles) of a relative trisection with these parameters.
pub fn handle_counts(g: i64, k: i64, p: i64, b: i64) -> Result<[u32; 4]> {
    let h2 = g - k + p + b - 1;
    let h3 = k - 2 * p - b + 1;
    if g < 0 || k < 0 || p < 0 || b < 1 || h2 < 0 || h3 < 0 {
        return Err(Error::NegativeHandleCount(format!("(g,k,p,b) = ({g},{k},{p},{b})")));
    }
    Ok([1, k as u32, h2 as u32, h3 as u32])
}

/// Handle counts and their sources for a diagram whose α/β pair is standard.
pub fn extract_handles(d: &Diagram) -> Result<HandleStructure> {
    let Some(Params::Relative { g, k, p, b }) = d.validate_relative().params else {
        return Err(Error::NotValidated);
    };
    let Some(pairing) = standard_pairing(d, Family::Alpha, Family::Beta)? else {
        return Err(Error::NotStandardizedInput);
    };
    let (g, k, p, b) = (g as i64, k as i64, p as i64, b as i64);
    let counts = handle_counts(g, k, p, b)?;
    let h3 = counts[3] as i64;
    let chi = euler_char_relative(g, k, p, b)?;
    let mut dotted: Vec<DottedSource> = (0..(2 * p + b - 1) as usize).map(DottedSource::CutArcDouble).collect();
    dotted.extend(pairing.parallel.iter().map(|(a, b)| DottedSource::ParallelPair(a.clone(), b.clone())));

    let dr = &d.drawing;
    let mut three = Vec::new();
    let mut attaching = Vec::new();
    for c in d.family(Family::Gamma) {
        let mut partner = None;
        if (three.len() as i64) < h3 {
            for a in d.family(Family::Alpha) {
                if !three.iter().any(|(x, _): &(String, String)| x == a) && are_parallel(dr, a, c)? {
                    partner = Some(a.clone());
                    break;
                }
            }
        }
        match partner {
            Some(a) => three.push((a, c.clone())),
            None => attaching.push(c.clone()),
        }
    }
    let hs = HandleStructure { counts, dotted, attaching, three_handle_sources: three };
    if hs.dotted.len() as i64 != k || hs.euler_characteristic() != chi {
        return Err(Error::NotStandardized(format!("{} 1-handle sources for k = {k}", hs.dotted.len())));
    }
    Ok(hs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::construct::unknotted_rp2_shadow;
    use crate::complement::{build_complement, select_arcs, SelectionMode};

    #[test]
    fn complement_handles() {
        let (rp2, _) = unknotted_rp2_shadow().unwrap();
        let c = build_complement(&rp2, &select_arcs(&rp2, &SelectionMode::AutoP0B3).unwrap()).unwrap();
        assert!(matches!(extract_handles(&c), Err(Error::NotStandardizedInput)));
        let (s, log) = standardize_alpha_beta(&c, 6).unwrap();
        assert!(log.len() <= 2, "{log:?}");
        assert!(standardize_alpha_beta(&s, 6).unwrap().1.is_empty());
        let h = extract_handles(&s).unwrap();
        assert_eq!(h.counts, [1, 2, 2, 0]);
        assert_eq!(h.attaching.len(), 2);
        assert_eq!(h.euler_characteristic(), 1);
    }

    #[test]
    fn ball() {
        let d = Diagram::new(Drawing::new(crate::combsurf::standard_surface(0, 1)));
        let h = extract_handles(&d).unwrap();
        assert_eq!(h.counts, [1, 0, 0, 0]);
    }
}
