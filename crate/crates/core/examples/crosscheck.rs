//! Lift-complex cohomology against Bredon cohomology, and vertical homotopies
//! against coboundaries.

use eqtwist::cartan::{compare_with_image, crosscheck, CartanTheory};
use eqtwist::fixtures;

fn main() -> eqtwist::Result<()> {
    for s in fixtures::CROSSCHECK {
        let twist = s.parsed()?.twist()?;
        let c = crosscheck(twist.as_ref(), 2)?;
        for r in &c.rows {
            println!("{:<22} H^{}: bredon {}, lift {}", s.name, r.degree, r.bredon, r.lift);
        }
        println!("{:<22} {}", s.name, c.cochain_map);
    }
    let twist = fixtures::CIRCLE_Z2.parsed()?.twist()?;
    let theory = CartanTheory::canonical(twist.coefficients(), 2, 2)?;
    let cmp = compare_with_image(twist.as_ref(), &theory, 1, 1 << 16)?;
    println!("S¹, Z/2, degree 1: {cmp:?}");
    Ok(())
}
