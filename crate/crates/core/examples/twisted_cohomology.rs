//! Twisted equivariant cohomology through group-valued and edge-path twists.

use eqtwist::cohomology::equivariant_cohomology;
use eqtwist::fixtures;

fn main() -> eqtwist::Result<()> {
    for s in [
        fixtures::CIRCLE_TWISTED_Z,
        fixtures::CIRCLE_TWISTED_Z4,
        fixtures::TRIANGLE_KAPPA,
        fixtures::REFCIRCLE_REDUCTION,
    ] {
        let twist = s.parsed()?.twist()?;
        for n in 0..=1 {
            println!(
                "{:<22} H^{n} = {}",
                s.name,
                equivariant_cohomology(twist.as_ref(), n)?.normal_form()
            );
        }
    }
    Ok(())
}
