//! Level sizes and homotopy of the cochain models `K(A,n)` and `C(A,n)`.

use eqtwist::abelian::FgAbGroup;
use eqtwist::em::CochainModel;
use eqtwist::simplicial::FiniteLevels;

fn main() -> eqtwist::Result<()> {
    for (a, n) in [
        (FgAbGroup::cyclic(2), 1),
        (FgAbGroup::cyclic(4), 1),
        (FgAbGroup::cyclic(2), 2),
    ] {
        let k = CochainModel::k(a.clone(), n);
        let c = CochainModel::c(a.clone(), n);
        let sizes = |m: &CochainModel| {
            (0..=3)
                .map(|q| m.simplices(q).map(|s| s.len()))
                .collect::<eqtwist::Result<Vec<_>>>()
        };
        println!(
            "A = {}, n = {n}: |K_q| = {:?}, |C_q| = {:?}",
            a.normal_form(),
            sizes(&k)?,
            sizes(&c)?
        );
    }
    Ok(())
}
