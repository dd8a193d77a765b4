//! Write a diagram as TRI text, read it back and render it as SVG.

use trisect::io::svg::render_svg;
use trisect::io::tri::{parse_tri, write_tri, TriDocument};

fn main() -> trisect::error::Result<()> {
    let d = trisect::catalog::get("cp2")?.diagram;
    let text = write_tri(&TriDocument::new(d));
    print!("{text}");
    let back = parse_tri(&text)?;
    assert_eq!(write_tri(&back), text);
    let out = std::env::temp_dir().join("cp2.svg");
    std::fs::write(&out, render_svg(&back.diagram))?;
    println!("wrote {}", out.display());
    Ok(())
}
