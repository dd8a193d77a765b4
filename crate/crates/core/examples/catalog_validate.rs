//! Load every built-in diagram and print its validation report.

fn main() -> trisect::error::Result<()> {
    for name in trisect::catalog::list() {
        let e = trisect::catalog::get(name)?;
        println!("{name:32} {}", e.expected);
        println!("{}", e.diagram.validate());
    }
    Ok(())
}
