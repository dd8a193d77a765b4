//! Homology and Euler characteristics of trisected 4-manifolds.

use std::fmt;

use crate::curves::CohomologyFrame;
use crate::diagrams::{Diagram, Family, Params};
use crate::error::{Error, Result};

use super::AbelianGroup;

/// H1(Σ) modulo the classes of all curves of the diagram.
fn curve_quotient(d: &Diagram) -> Result<AbelianGroup> {
    let dr = &d.drawing;
    let frame = CohomologyFrame::absolute(dr);
    let mut rel = Vec::new();
    for f in Family::ALL {
        for n in d.family(f) {
            let c = dr.curve(n)?;
            let co = dr.cochain_on(c, &frame.edges);
            rel.push(frame.coords(&co).ok_or_else(|| Error::MalformedCurve(n.clone(), "not a cycle".into()))?);
        }
    }
    Ok(AbelianGroup::cokernel(frame.rank(), &rel))
}

pub fn h1_closed(d: &Diagram) -> Result<AbelianGroup> {
    match d.validate_trisection().params {
        Some(Params::Closed { .. }) => curve_quotient(d),
        _ => Err(Error::NotValidated),
    }
}

/// H1 of the spine Σ ∪ (2-handles along α, β, γ) of a relative trisection.
pub fn h1_spine_relative(d: &Diagram) -> Result<AbelianGroup> {
    match d.validate_relative().params {
        Some(Params::Relative { .. }) => curve_quotient(d),
        _ => Err(Error::NotValidated),
    }
}

pub fn euler_char_closed(g: u32, k: [u32; 3]) -> i64 {
    2 + g as i64 - k.iter().map(|x| *x as i64).sum::<i64>()
}

/// Alternating count of the handles of a relative trisection.
pub fn euler_char_relative(g: i64, k: i64, p: i64, b: i64) -> Result<i64> {
    let h2 = g - k + p + b - 1;
    let h3 = k - 2 * p - b + 1;
    if h2 < 0 || h3 < 0 || k < 0 {
        return Err(Error::NegativeHandleCount(format!("(g,k,p,b) = ({g},{k},{p},{b})")));
    }
    Ok(1 - k + h2 - h3)
}

/// Euler characteristic of whatever a validated diagram describes.
pub fn euler_char(d: &Diagram) -> Result<i64> {
    match d.parameters()? {
        Params::Closed { g, k } => Ok(euler_char_closed(g, k)),
        Params::Relative { g, k, p, b } => euler_char_relative(g as i64, k as i64, p as i64, b as i64),
        Params::Shadow { g, k, .. } => Ok(euler_char_closed(g, [k; 3])),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySphereVerdict {
    pub h1: AbelianGroup,
    pub euler: i64,
}

impl HomologySphereVerdict {
    pub fn passed(&self) -> bool {
        self.h1.is_trivial() && self.euler == 2
    }
}

impl fmt::Display for HomologySphereVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H1 = {}, chi = {}: {}", self.h1, self.euler, if self.passed() { "homology S^4" } else { "not a homology S^4" })
    }
}

/// Trivial H1 and χ = 2 make a closed orientable 4-manifold a homology sphere.
pub fn homology_4sphere_check(d: &Diagram) -> Result<HomologySphereVerdict> {
    let Some(Params::Closed { g, k }) = d.validate_trisection().params else {
        return Err(Error::NotValidated);
    };
    Ok(HomologySphereVerdict { h1: curve_quotient(d)?, euler: euler_char_closed(g, k) })
}

/// For each boundary circle, whether the binding is null-homologous in the
/// trisected 4-manifold.
pub fn binding_vanishes(d: &Diagram) -> Result<Vec<bool>> {
    let base = h1_spine_relative(d)?;
    let mut dr = d.drawing.clone();
    let circles = dr.surface().boundary_circles();
    let mut out = Vec::new();
    for (i, c) in circles.iter().enumerate() {
        let name = format!("binding_{i}");
        dr.boundary_parallel(c[0], &name)?;
        let mut e = Diagram { drawing: dr.clone(), ..d.clone() };
        e.curves[0].push(name);
        out.push(curve_quotient(&e)? == base);
    }
    Ok(out)
}
