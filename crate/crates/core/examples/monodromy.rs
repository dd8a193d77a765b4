//! Open-book twists on the boundary of T2 and its Seifert-fibred homology.

use trisect::openbook::{check_quaternion_signature, monodromy_twist_vector, seifert_h1};

fn main() -> trisect::error::Result<()> {
    for name in ["T2", "T2_mirror"] {
        let d = trisect::catalog::get(name)?.diagram;
        let t = monodromy_twist_vector(&d)?;
        println!("{name}: twists {t}, quaternion {}, H1 {}", check_quaternion_signature(&t.values), seifert_h1(&t.values));
    }
    Ok(())
}
