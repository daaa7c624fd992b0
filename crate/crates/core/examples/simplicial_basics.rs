//! Validates finite simplicial sets and builds the cylinder `X × Δ[1]`.

use eqtwist::fixtures;
use eqtwist::io;
use eqtwist::simplicial::{product_with_interval, standard_simplex, validate_complex};

fn main() -> eqtwist::Result<()> {
    for name in ["circle.json", "sphere2.json", "broken_face.json"] {
        let c = io::complex_from_json(&io::parse(fixtures::file(name).expect("bundled"), name)?)?;
        println!("{name}: counts {:?}", c.counts());
        println!("  {}", validate_complex(&c));
    }
    let delta2 = standard_simplex(2);
    let circle = io::complex_from_json(&io::parse(fixtures::file("circle.json").expect("bundled"), "circle")?)?;
    let cyl = product_with_interval(&circle)?;
    println!("Δ[2] counts {:?}", delta2.counts());
    println!("S¹ × Δ[1] counts {:?}", cyl.product.complex.counts());
    Ok(())
}
