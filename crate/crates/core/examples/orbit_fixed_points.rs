//! The orbit category of S₃ and the fixed-point diagram of the reflected circle.

use eqtwist::fixtures;
use eqtwist::orbit::{FiniteGroup, OrbitCategory};

fn main() -> eqtwist::Result<()> {
    let s3 = OrbitCategory::new(FiniteGroup::symmetric3());
    println!(
        "O(S3): {} objects, {} morphisms",
        s3.num_objects(),
        s3.morphisms().len()
    );
    for h in s3.objects() {
        println!("  {}", s3.key(h));
    }

    let space = fixtures::REFCIRCLE_Z.parsed()?.space()?;
    let orbit = space.orbit_category();
    for h in orbit.objects() {
        println!(
            "X^{}: counts {:?}",
            orbit.key(h),
            space.fixed_points(h).complex.counts()
        );
    }
    println!("{}", space.validate_phi());
    println!("G-connected: {}", space.check_g_connected().connected);
    Ok(())
}
