//! Named diagrams shipped with the crate.
//!
//! Most entries are TRI files under `catalog/`, produced by [`construct`] and
//! checked in; mirrors are derived on load. Every entry is validated and
//! compared with its expected parameters whenever it is fetched.

pub mod construct;

use crate::diagrams::{Diagram, Params};
use crate::error::{Error, Result};
use crate::io::tri::{parse_tri, write_tri, TriDocument};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub diagram: Diagram,
    pub note: &'static str,
    pub expected: Params,
}

enum Source {
    File(&'static str),
    MirrorOf(&'static str),
}

struct Spec {
    name: &'static str,
    source: Source,
    note: &'static str,
    expected: Params,
}

macro_rules! file {
    ($n:literal) => {
        Source::File(include_str!(concat!("../../catalog/", $n, ".tri")))
    };
}

const fn rel(g: u32, k: u32, p: u32, b: u32) -> Params {
    Params::Relative { g, k, p, b }
}

const fn shadow(g: u32, k: u32, c: u32, b: u32) -> Params {
    Params::Shadow { g, k, c, b }
}

const fn closed(g: u32, k: u32) -> Params {
    Params::Closed { g, k: [k; 3] }
}

fn specs() -> Vec<Spec> {
    vec![
        Spec { name: "s4_genus0", source: file!("s4_genus0"), note: "the sphere with no curves", expected: closed(0, 0) },
        Spec { name: "cp2", source: file!("cp2"), note: "torus with three curves meeting pairwise once", expected: closed(1, 0) },
        Spec {
            name: "cp1_shadow",
            source: file!("cp1_shadow"),
            note: "the complex line in CP^2 in (1,1)-bridge position",
            expected: shadow(1, 0, 1, 1),
        },
        Spec {
            name: "fig2_example",
            source: file!("fig2_example"),
            note: "two copies of the CP^2 summand on a twice-holed torus; alpha/beta already standard",
            expected: rel(3, 3, 1, 2),
        },
        Spec {
            name: "T2",
            source: file!("T2"),
            note: "neighbourhood P+ of a projective plane with Euler number +2, built as the complement of \
                   the unknotted projective plane with Euler number -2; the vanishing binding carries a \
                   right-handed pair of twists",
            expected: rel(2, 2, 0, 3),
        },
        Spec { name: "T2_mirror", source: Source::MirrorOf("T2"), note: "mirror of T2, a trisection of P-", expected: rel(2, 2, 0, 3) },
        Spec {
            name: "unknotted_rp2_shadow_plus",
            source: file!("unknotted_rp2_shadow_plus"),
            note: "unknotted projective plane in S^4, Euler number +2, (0,0;1,2)",
            expected: shadow(0, 0, 1, 2),
        },
        Spec {
            name: "unknotted_rp2_shadow_minus",
            source: Source::MirrorOf("unknotted_rp2_shadow_plus"),
            note: "mirror of the plus shadow, Euler number -2",
            expected: shadow(0, 0, 1, 2),
        },
        Spec {
            name: "rp2_shadows_fig9_mid",
            source: file!("rp2_shadows_fig9_mid"),
            note: "the plus shadow with its families relabelled cyclically once; same surface, different diagram",
            expected: shadow(0, 0, 1, 2),
        },
        Spec {
            name: "rp2_shadows_fig9_right",
            source: file!("rp2_shadows_fig9_right"),
            note: "the plus shadow with its families relabelled cyclically twice",
            expected: shadow(0, 0, 1, 2),
        },
        Spec {
            name: "torus_shadow",
            source: file!("torus_shadow"),
            note: "unknotted torus in (1,3)-bridge position, stabilized to genus 3",
            expected: shadow(3, 1, 1, 3),
        },
        Spec {
            name: "spun_trefoil_rp2_shadow",
            source: file!("spun_trefoil_rp2_shadow"),
            note: "stand-in: the unknotted projective plane (Euler number -2) stabilized to genus 3; \
                   the spun-trefoil summand is not transcribed, so only H1 of the complement differs \
                   from the knotted surface",
            expected: shadow(3, 1, 1, 2),
        },
        Spec {
            name: "fig14_completion",
            source: file!("fig14_completion"),
            note: "closed trisection of S^4 from regluing the neighbourhood of the minus projective plane \
                   into its complement by the trivial matching, with automatically completed curves",
            expected: closed(6, 2),
        },
    ]
}

/// Names of all entries, in catalog order.
pub fn list() -> Vec<&'static str> {
    specs().iter().map(|s| s.name).collect()
}

fn load(specs: &[Spec], name: &str) -> Result<Diagram> {
    let spec = specs.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    match spec.source {
        Source::File(text) => Ok(parse_tri(text)?.diagram),
        Source::MirrorOf(base) => Ok(load(specs, base)?.mirrored()),
    }
}

/// Loads, validates and checks an entry.
pub fn get(name: &str) -> Result<CatalogEntry> {
    let specs = specs();
    let diagram = load(&specs, name)?;
    let spec = specs.iter().find(|s| s.name == name).expect("loaded");
    let got = diagram.validate().into_result()?.params;
    if got != Some(spec.expected) {
        return Err(Error::ValidationFailed(format!("{name}: expected {}, derived {got:?}", spec.expected)));
    }
    Ok(CatalogEntry { name: spec.name, diagram, note: spec.note, expected: spec.expected })
}

/// Rebuilds the file-backed entries from [`construct`].
pub fn regenerate() -> Result<Vec<(&'static str, String)>> {
    use construct::*;
    let (plus, _) = unknotted_rp2_shadow()?;
    let rotated = |k: usize| {
        let mut d = plus.clone();
        d.curves.rotate_right(k);
        d.arcs.rotate_right(k);
        d
    };
    let (mut torus, sb) = unknotted_torus_shadow()?;
    stabilize_thrice(&mut torus, &sb)?;
    let (rp2, sb) = unknotted_rp2_shadow()?;
    let mut minus = rp2.mirrored();
    stabilize_thrice(&mut minus, &sb)?;
    let twist = crate::glue::price_twist_pipeline(&plus.mirrored(), -2)?;
    let trivial = twist.get(crate::glue::TwistLabel::Trivial).ok_or_else(|| Error::CompletionFailed("no trivial regluing".into()))?;
    let built: Vec<(&'static str, Diagram)> = vec![
        ("s4_genus0", s4_genus0()),
        ("cp2", cp2()?.0),
        ("cp1_shadow", cp1_shadow()?),
        ("fig2_example", fig2_example()?),
        ("T2", crate::glue::rp2_neighbourhood(2)?),
        ("unknotted_rp2_shadow_plus", plus.clone()),
        ("rp2_shadows_fig9_mid", rotated(1)),
        ("rp2_shadows_fig9_right", rotated(2)),
        ("torus_shadow", torus),
        ("spun_trefoil_rp2_shadow", minus),
        ("fig14_completion", trivial.diagram.clone()),
    ];
    let specs = specs();
    built
        .into_iter()
        .map(|(n, d)| {
            let spec = specs.iter().find(|s| s.name == n).expect("listed");
            let mut doc = TriDocument::new(d);
            doc.meta.insert("name".into(), n.to_string());
            doc.meta.insert("params".into(), spec.expected.to_string());
            doc.meta.insert("note".into(), spec.note.split_whitespace().collect::<Vec<_>>().join(" "));
            Ok((n, write_tri(&doc)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::construct::*;
    use crate::diagrams::Params;

    #[test]
    fn closed_entries() {
        let r = s4_genus0().validate_trisection();
        assert!(r.passed(), "{r}");
        assert_eq!(r.params, Some(Params::Closed { g: 0, k: [0, 0, 0] }));
        let (d, _) = cp2().unwrap();
        let r = d.validate_trisection();
        assert!(r.passed(), "{r}");
        assert_eq!(r.params, Some(Params::Closed { g: 1, k: [0, 0, 0] }));
        for i in 0..3 {
            let (d, _) = stabilization_piece(i).unwrap();
            let r = d.validate_trisection();
            assert!(r.passed(), "{r}");
            let mut k = [0; 3];
            k[i] = 1;
            assert_eq!(r.params, Some(Params::Closed { g: 1, k }));
        }
    }

    #[test]
    fn shadows() {
        let (d, _) = unknotted_rp2_shadow().unwrap();
        let r = d.validate_shadow();
        assert!(r.passed(), "{r}");
        assert_eq!(r.params, Some(Params::Shadow { g: 0, k: 0, c: 1, b: 2 }));
        let (d, _) = unknotted_torus_shadow().unwrap();
        let r = d.validate_shadow();
        assert!(r.passed(), "{r}");
        assert_eq!(r.params, Some(Params::Shadow { g: 0, k: 0, c: 1, b: 3 }));
        let r = cp1_shadow().unwrap().validate_shadow();
        assert!(r.passed(), "{r}");
        assert_eq!(r.params, Some(Params::Shadow { g: 1, k: 0, c: 1, b: 1 }));
    }

    #[test]
    fn stabilized_shadows() {
        let (mut d, sb) = unknotted_torus_shadow().unwrap();
        stabilize_thrice(&mut d, &sb).unwrap();
        let r = d.validate_shadow();
        assert!(r.passed(), "{r}");
        assert_eq!(r.params, Some(Params::Shadow { g: 3, k: 1, c: 1, b: 3 }));
    }

    #[test]
    fn fig2_handles() {
        let d = fig2_example().unwrap();
        let r = d.validate_relative();
        assert!(r.passed(), "{r}");
        assert_eq!(r.params, Some(Params::Relative { g: 3, k: 3, p: 1, b: 2 }));
        let (s, log) = crate::kirby::standardize_alpha_beta(&d, 4).unwrap();
        assert!(log.is_empty());
        assert_eq!(crate::kirby::extract_handles(&s).unwrap().counts, [1, 3, 2, 0]);
    }

    #[test]
    fn registry() {
        for name in super::list() {
            let e = super::get(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(e.diagram.parameters().unwrap(), e.expected);
        }
        assert!(matches!(super::get("nope"), Err(crate::Error::UnknownEntry(_))));
        assert_eq!(super::get("torus_shadow").unwrap().expected, Params::Shadow { g: 3, k: 1, c: 1, b: 3 });
    }

    #[test]
    fn files_match_constructions() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
        for (name, text) in super::regenerate().unwrap() {
            let path = dir.join(format!("{name}.tri"));
            if std::env::var_os("TRISECT_REGENERATE").is_some() {
                std::fs::write(&path, &text).unwrap();
            }
            assert_eq!(std::fs::read_to_string(&path).unwrap(), text, "{name} is stale");
        }
    }
}
