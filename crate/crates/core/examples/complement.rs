//! Complement of the unknotted projective plane, for every valid arc selection.

use trisect::complement::{all_selections, build_complement};

fn main() -> trisect::error::Result<()> {
    let shadow = trisect::catalog::get("unknotted_rp2_shadow_plus")?.diagram;
    println!("shadow {}", shadow.parameters()?);
    for sel in all_selections(&shadow)? {
        let c = build_complement(&shadow, &sel)?;
        print!("{sel}");
        println!("  -> {}", c.parameters()?);
    }
    Ok(())
}
