//! Relative trisection of the complement of a bridge-trisected surface.
//!
//! Each used shadow arc becomes two curves of its family: the boundary of a
//! neighbourhood of the arc and its end holes, and the arc closed up through
//! a band attached at the two holes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::combsurf::FaceId;
use crate::diagrams::{Diagram, Family, Params, RelativeTrisectionDiagram, ShadowDiagram};
use crate::error::{Error, Result};

/// Which shadow arcs are turned into bands.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArcSelection {
    pub used: [Vec<String>; 3],
    /// A bridge point no used arc may end at.
    pub protected: Option<String>,
}

impl fmt::Display for ArcSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fam in Family::ALL {
            writeln!(f, "USE {} {}", fam.name(), self.used[fam.index()].join(" "))?;
        }
        if let Some(p) = &self.protected {
            writeln!(f, "PROTECT {p}")?;
        }
        Ok(())
    }
}

impl ArcSelection {
    /// Parses the block written by `Display`.
    pub fn parse(text: &str) -> Result<ArcSelection> {
        let mut sel = ArcSelection::default();
        for (i, line) in text.lines().enumerate() {
            let words: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| Error::SyntaxError { line: i + 1, col: 1, msg: msg.into() };
            match words.as_slice() {
                [] => {}
                ["#", ..] => {}
                ["USE", fam, rest @ ..] => {
                    let f = Family::ALL.into_iter().find(|f| f.name() == *fam).ok_or_else(|| bad("unknown family"))?;
                    sel.used[f.index()] = rest.iter().map(|s| s.to_string()).collect();
                }
                ["PROTECT", p] => sel.protected = Some(p.to_string()),
                _ => return Err(bad("expected USE or PROTECT")),
            }
        }
        Ok(sel)
    }
}

/// How `select_arcs` picks arcs.
#[derive(Clone, Debug)]
pub enum SelectionMode {
    Explicit(ArcSelection),
    /// output must be planar with three boundary components
    AutoP0B3,
    AutoAny,
}

/// Euler characteristic of the knotted surface and the mark faces at the
/// ends of each arc, after checking that the shadow has c = 1.
fn shadow_data(d: &ShadowDiagram) -> Result<(i64, BTreeMap<String, (FaceId, FaceId)>)> {
    let report = d.validate_shadow();
    let Some(Params::Shadow { c, b, .. }) = report.params else {
        return Err(Error::ValidationFailed(report.to_string()));
    };
    if c != 1 {
        return Err(Error::CNotOne(c));
    }
    let mut ends = BTreeMap::new();
    for f in Family::ALL {
        for a in d.shadow(f) {
            let curve = d.drawing.curve(a)?;
            let (first, last) = (curve.chords[0].face, curve.chords.last().expect("arc").face);
            ends.insert(a.clone(), (first, last));
        }
    }
    Ok((3 - b as i64, ends))
}

fn check_selection(d: &ShadowDiagram, sel: &ArcSelection) -> Result<()> {
    let (chi, ends) = shadow_data(d)?;
    for f in Family::ALL {
        let used = &sel.used[f.index()];
        let all = d.shadow(f);
        let distinct: BTreeSet<&String> = used.iter().collect();
        if used.len() as i64 != 2 - chi || distinct.len() != used.len() {
            return Err(Error::SelectionInvalid(format!("{} needs {} distinct arcs", f.name(), 2 - chi)));
        }
        if let Some(a) = used.iter().find(|a| !all.contains(a)) {
            return Err(Error::SelectionInvalid(format!("{a} is not a {} arc", f.arc_name())));
        }
    }
    if let Some(p) = &sel.protected {
        let face = d.drawing.surface().mark_face(p)?;
        if let Some(a) = sel.used.iter().flatten().find(|a| ends[*a].0 == face || ends[*a].1 == face) {
            return Err(Error::SelectionInvalid(format!("{a} ends at the protected point {p}")));
        }
    }
    Ok(())
}

fn band_name(arc: &str) -> String {
    format!("band_{arc}")
}

/// Curve names produced for a used arc: the band closure and the encircling curve.
pub fn derived_names(arc: &str) -> (String, String) {
    (format!("{arc}_core"), format!("{arc}_ring"))
}

pub fn build_complement(d: &ShadowDiagram, sel: &ArcSelection) -> Result<RelativeTrisectionDiagram> {
    check_selection(d, sel)?;
    let mut dr = d.drawing.clone();
    let marks: Vec<String> = dr.surface().marks().keys().cloned().collect();
    for m in &marks {
        dr = dr.delete_marked_disk(m)?;
    }
    dr.isolate_boundary_points()?;
    let used: Vec<&String> = sel.used.iter().flatten().collect();
    for a in &used {
        dr.regular_neighborhood_boundary(a, &derived_names(a).1, true)?;
    }
    let mut bands = Vec::new();
    for a in &used {
        let c = dr.curve(a)?;
        let (pa, pb) = (c.points().next(), c.points().last());
        let (Some(pa), Some(pb)) = (pa, pb) else {
            return Err(Error::EndpointsNotHoles);
        };
        let (sa, sb) = (dr.boundary_slot_of(pa)?, dr.boundary_slot_of(pb)?);
        bands.push(dr.attach_band(&band_name(a), sa, sb)?);
    }
    for (a, band) in used.iter().zip(bands) {
        dr.band_core_closure(a, band, &derived_names(a).0)?;
    }
    for f in Family::ALL {
        for a in d.shadow(f) {
            if !sel.used[f.index()].contains(a) {
                dr.remove_curve(a)?;
            }
        }
    }
    let mut out = Diagram::new(dr);
    for f in Family::ALL {
        let mut names = d.family(f).to_vec();
        for a in &sel.used[f.index()] {
            let (core, ring) = derived_names(a);
            names.push(core);
            names.push(ring);
        }
        out.curves[f.index()] = names;
    }
    Ok(out)
}

/// Builds and validates; the report's failures become the error.
pub fn simulate(d: &ShadowDiagram, sel: &ArcSelection) -> Result<(RelativeTrisectionDiagram, Params)> {
    let out = build_complement(d, sel)?;
    let report = out.validate_relative();
    let params = report.params;
    report.into_result()?;
    Ok((out, params.expect("validated")))
}

pub fn select_arcs(d: &ShadowDiagram, mode: &SelectionMode) -> Result<ArcSelection> {
    if let SelectionMode::Explicit(sel) = mode {
        check_selection(d, sel)?;
        return Ok(sel.clone());
    }
    let mut found = candidate_selections(d, matches!(mode, SelectionMode::AutoP0B3), true)?;
    Ok(found.remove(0))
}

/// Every selection giving a planar page with three bindings, in search order.
pub fn p0b3_selections(d: &ShadowDiagram) -> Result<Vec<ArcSelection>> {
    candidate_selections(d, true, false)
}

/// Every selection the complement construction accepts, in search order.
pub fn all_selections(d: &ShadowDiagram) -> Result<Vec<ArcSelection>> {
    candidate_selections(d, false, false)
}

fn candidate_selections(d: &ShadowDiagram, want_p0b3: bool, first_only: bool) -> Result<Vec<ArcSelection>> {
    shadow_data(d)?;
    let mut arcs: [Vec<String>; 3] = Default::default();
    for f in Family::ALL {
        arcs[f.index()] = d.shadow(f).to_vec();
        arcs[f.index()].sort();
    }
    let protect: Vec<Option<String>> = if want_p0b3 {
        d.drawing.surface().marks().keys().cloned().map(Some).collect()
    } else {
        vec![None]
    };
    let mut log = String::new();
    let mut out = Vec::new();
    for ua in &arcs[0] {
        for ub in &arcs[1] {
            for uc in &arcs[2] {
                for p in &protect {
                    let unused = [ua, ub, uc];
                    let mut sel = ArcSelection { protected: p.clone(), ..Default::default() };
                    for f in Family::ALL {
                        sel.used[f.index()] = arcs[f.index()].iter().filter(|a| *a != unused[f.index()]).cloned().collect();
                    }
                    let outcome = check_selection(d, &sel).and_then(|_| simulate(d, &sel));
                    match outcome {
                        Ok(_) if !want_p0b3 => out.push(sel),
                        Ok((_, Params::Relative { p: 0, b: 3, .. })) => out.push(sel),
                        Ok((_, params)) => log.push_str(&format!("unused {ua} {ub} {uc}: gives {params}\n")),
                        Err(e) => log.push_str(&format!("unused {ua} {ub} {uc} protect {p:?}: {e}\n")),
                    }
                    if first_only && !out.is_empty() {
                        return Ok(out);
                    }
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NoValidSelection(log));
    }
    Ok(out)
}

pub fn predicted_parameters(g: i64, k: i64, chi: i64, b_out: i64, p_out: i64) -> Result<(i64, i64, i64, i64)> {
    if 2 * p_out + b_out != 4 - chi || p_out < 0 || b_out < 1 {
        return Err(Error::PageConstraintViolated(format!("2*{p_out}+{b_out} != {}", 4 - chi)));
    }
    let twice = 12 + 2 * g - 5 * chi - b_out;
    if twice % 2 != 0 {
        return Err(Error::ParityError(format!("g' = {twice}/2")));
    }
    let g2 = twice / 2;
    let k2 = k + 3 - chi;
    debug_assert_eq!(g2 + b_out + p_out - 1, g + 7 - 3 * chi);
    debug_assert_eq!(g2 - p_out, g + 4 - 2 * chi);
    Ok((g2, k2, p_out, b_out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::construct::unknotted_rp2_shadow;

    fn sel(a: &str, b: &str, c: &str) -> ArcSelection {
        ArcSelection { used: [vec![a.into()], vec![b.into()], vec![c.into()]], protected: None }
    }

    #[test]
    fn rp2_selections() {
        let (d, _) = unknotted_rp2_shadow().unwrap();
        let (out, p) = simulate(&d, &sel("a12", "b23", "c13")).unwrap();
        assert_eq!(p, Params::Relative { g: 2, k: 2, p: 0, b: 3 });
        assert_eq!(out.drawing.surface().euler_characteristic(), -5);
        let (_, p) = simulate(&d, &sel("a12", "b23", "c24")).unwrap();
        assert_eq!(p, Params::Relative { g: 3, k: 2, p: 1, b: 1 });
    }

    #[test]
    fn prediction_examples() {
        assert_eq!(predicted_parameters(0, 0, 1, 3, 0).unwrap(), (2, 2, 0, 3));
        assert_eq!(predicted_parameters(3, 1, 0, 2, 1).unwrap(), (8, 4, 1, 2));
        assert_eq!(predicted_parameters(3, 1, 1, 3, 0).unwrap(), (5, 3, 0, 3));
        assert!(matches!(predicted_parameters(0, 0, 1, 2, 0), Err(Error::PageConstraintViolated(_))));
    }

    #[test]
    fn selection_text_round_trip() {
        let mut s = sel("a12", "b23", "c13");
        s.protected = Some("M4".into());
        assert_eq!(ArcSelection::parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn auto_modes_on_stabilized_shadows() {
        use crate::catalog::construct::{stabilize_thrice, unknotted_torus_shadow};
        let (d, _) = unknotted_rp2_shadow().unwrap();
        let s = select_arcs(&d, &SelectionMode::AutoP0B3).unwrap();
        assert_eq!(simulate(&d, &s).unwrap().1, Params::Relative { g: 2, k: 2, p: 0, b: 3 });

        let (mut d, sb) = unknotted_rp2_shadow().unwrap();
        stabilize_thrice(&mut d, &sb).unwrap();
        let s = select_arcs(&d, &SelectionMode::AutoP0B3).unwrap();
        assert_eq!(simulate(&d, &s).unwrap().1, Params::Relative { g: 5, k: 3, p: 0, b: 3 });

        let (mut d, sb) = unknotted_torus_shadow().unwrap();
        stabilize_thrice(&mut d, &sb).unwrap();
        let s = select_arcs(&d, &SelectionMode::AutoAny).unwrap();
        let (out, p) = simulate(&d, &s).unwrap();
        assert_eq!(p, Params::Relative { g: 8, k: 4, p: 1, b: 2 });
        assert_eq!(out.family(Family::Alpha).len(), 7);
    }
}
