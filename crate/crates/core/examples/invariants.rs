//! Homology and fundamental group of closed trisected 4-manifolds.

use trisect::invariants::{h1_closed, homology_4sphere_check, pi1_presentation};

fn main() -> trisect::error::Result<()> {
    for name in ["s4_genus0", "cp2", "fig14_completion"] {
        let d = trisect::catalog::get(name)?.diagram;
        println!("{name}: H1 {}, pi1 {}", h1_closed(&d)?, pi1_presentation(&d)?);
        println!("{}", homology_4sphere_check(&d)?);
    }
    Ok(())
}
