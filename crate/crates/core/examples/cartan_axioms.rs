//! Axiom checks for the bundled Cartan theories, including the broken controls.

use eqtwist::cartan::check_axioms;
use eqtwist::fixtures;

fn main() -> eqtwist::Result<()> {
    for (name, expected) in fixtures::THEORIES {
        let theory = fixtures::theory(name, None)?;
        let report = check_axioms(&theory, 1 << 16)?;
        println!("{name}: failing {:?} (expected {expected:?})", report.failing());
    }
    Ok(())
}
