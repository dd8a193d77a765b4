//! Reglue a projective plane neighbourhood to its complement and classify the results.

use trisect::glue::price_twist_pipeline;

fn main() -> trisect::error::Result<()> {
    let shadow = trisect::catalog::get("unknotted_rp2_shadow_minus")?.diagram;
    let r = price_twist_pipeline(&shadow, -2)?;
    print!("{r}");
    for o in &r.outputs {
        println!("{}: {} with H1 {}", o.label.name(), o.diagram.parameters()?, o.h1);
    }
    Ok(())
}
