//! Handle decomposition read off a relative trisection diagram.

use trisect::kirby::{extract_handles, standardize_alpha_beta};

fn main() -> trisect::error::Result<()> {
    let d = trisect::catalog::get("fig2_example")?.diagram;
    let (std, log) = standardize_alpha_beta(&d, 50)?;
    for step in &log {
        println!("{step}");
    }
    print!("{}", extract_handles(&std)?);
    Ok(())
}
