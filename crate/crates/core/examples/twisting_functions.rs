//! Twisting identities on W̄G and on a twisting function read from JSON.

use eqtwist::fixtures;
use eqtwist::orbit::FiniteGroup;
use eqtwist::twisting::{validate_twisting_identities, WBar};

fn main() -> eqtwist::Result<()> {
    for group in [
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(4),
        FiniteGroup::symmetric3(),
    ] {
        let w = WBar::new(group);
        let r = validate_twisting_identities(&w, w.group(), |x| w.tau(x), 4, "W̄G τ")?;
        println!("order {}: {r}", w.group().order());
    }
    for s in [fixtures::CIRCLE_TWISTED_Z, fixtures::REFCIRCLE_BAD_TAU] {
        match s.parsed().and_then(|p| p.twist()) {
            Ok(t) => println!("{}: {}", s.name, t.validate(3)?),
            Err(e) => println!("{}: rejected: {e}", s.name),
        }
    }
    Ok(())
}
