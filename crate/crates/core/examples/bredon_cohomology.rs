//! Untwisted Bredon cohomology of the bundled fixtures.

use eqtwist::cohomology::equivariant_cohomology;
use eqtwist::fixtures;

fn main() -> eqtwist::Result<()> {
    for s in [
        fixtures::CIRCLE_Z,
        fixtures::SPHERE_Z,
        fixtures::SIMPLEX_Z,
        fixtures::REFCIRCLE_Z,
        fixtures::REFCIRCLE_FORGETFUL_Z,
    ] {
        let twist = s.parsed()?.twist()?;
        let groups = (0..=2)
            .map(|n| equivariant_cohomology(twist.as_ref(), n).map(|g| g.normal_form().to_string()))
            .collect::<eqtwist::Result<Vec<_>>>()?;
        println!("{:<24} H^0..2 = {}", s.name, groups.join(", "));
    }
    Ok(())
}
