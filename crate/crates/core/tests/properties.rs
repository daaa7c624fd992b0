//! Property tests with pinned seeds, each checked against an oracle in `common`.

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use eqtwist::abelian::{smith_normal_form, FgAbGroup, IntMatrix, NormalForm};
use eqtwist::cartan::crosscheck;
use eqtwist::cohomology::{equivariant_cohomology_with, TwistedComplex};
use eqtwist::equivariant::RepChoice;
use eqtwist::io::Sources;
use eqtwist::simplicial::{standard_simplex, validate_complex, FiniteSimplicialSet, Product, SimplexRef};
use eqtwist::twisting::Twist;

use common::*;

fn pinned(seed: u64, cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn matrix() -> impl Strategy<Value = Mat> {
    (0usize..5, 0usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

fn to_int(m: &Mat, cols: usize) -> IntMatrix {
    IntMatrix::from_rows_with_cols(m, cols)
}

fn cols(m: &Mat) -> usize {
    m.first().map_or(0, Vec::len)
}

/// A circle with `π = ℤ/2` acting on `ℤ/m` (or `ℤ` when `m = 0`) by `u`.
fn twisted_circle(m: u64, u: i64) -> Box<dyn Twist> {
    let coeffs = if m == 0 { "Z".to_string() } else { format!("Z/{m}") };
    let s = |name: &str, text: String| Some((name.to_string(), text));
    Sources {
        complex: ("circle".into(), fixtures_text("circle.json")),
        group: None,
        coeffs: s("coeffs", format!("{{ \"constant\": \"{coeffs}\" }}")),
        twist: s("twist", fixtures_text("circle_tau.json")),
        action: s(
            "action",
            format!("{{ \"action\": {{ \"{{e}}\": {{ \"t\": [[{u}]] }} }} }}"),
        ),
    }
    .parse()
    .unwrap()
    .twist()
    .unwrap()
}

fn fixtures_text(name: &str) -> String {
    eqtwist::fixtures::file(name).unwrap().to_string()
}

/// Moduli with an involution `u` (`u² ≡ 1`).
fn modulus_and_involution() -> impl Strategy<Value = (u64, i64)> {
    (2u64..=12).prop_flat_map(|m| {
        let invs: Vec<i64> = (1..m as i64).filter(|u| (u * u) % m as i64 == 1).collect();
        (Just(m), prop::sample::select(invs))
    })
}

proptest! {
    #![proptest_config(pinned(0x5eed_0001, 128))]

    #[test]
    fn smith_form_matches_oracle(m in matrix()) {
        let c = cols(&m);
        let a = to_int(&m, c);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        let diag: Vec<BigInt> = s.diagonal().into_iter().filter(|d| d != &BigInt::from(0)).collect();
        let expected: Vec<BigInt> = invariant_factors(&m).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(diag, expected);
    }

    #[test]
    fn group_presentation_matches_oracle(m in matrix()) {
        let n = m.len();
        let g = FgAbGroup::new(n, to_int(&m, cols(&m))).unwrap();
        let f = invariant_factors(&m);
        let torsion: Vec<u64> = f.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
        prop_assert_eq!(g.normal_form(), &NormalForm::new(n - f.len(), &torsion));
    }
}

fn prism() -> FiniteSimplicialSet {
    Product::new(&standard_simplex(2), &standard_simplex(1))
        .unwrap()
        .complex
}

proptest! {
    #![proptest_config(pinned(0x5eed_0002, 64))]

    #[test]
    fn simplicial_identities_on_the_prism(q in 1usize..=3, pick in any::<prop::sample::Index>(), i in 0usize..=4, j in 0usize..=4) {
        let x = prism();
        let all = x.simplices_at(q);
        let s: SimplexRef = all[pick.index(all.len())].clone();
        let (i, j) = (i % (q + 1), j % (q + 1));
        let d = |k: usize, y: &SimplexRef| x.face(k, y).unwrap();
        let sd = |k: usize, y: &SimplexRef| x.degeneracy(k, y).unwrap();
        if q >= 2 && i < j {
            prop_assert_eq!(d(i, &d(j, &s)), d(j - 1, &d(i, &s)));
        }
        if i <= j {
            prop_assert_eq!(sd(i, &sd(j, &s)), sd(j + 1, &sd(i, &s)));
        }
        let sj = sd(j, &s);
        if i < j {
            prop_assert_eq!(d(i, &sj), sd(j - 1, &d(i, &s)));
        } else if i == j || i == j + 1 {
            prop_assert_eq!(d(i, &sj), s.clone());
        } else {
            prop_assert_eq!(d(i, &sj), sd(j, &d(i - 1, &s)));
        }
    }
}

#[test]
fn prism_is_a_valid_complex() {
    let r = validate_complex(&prism());
    assert!(r.is_ok(), "{r}");
    // three (2,1)-shuffles on top, Euler characteristic 1
    assert_eq!(prism().counts()[..4], [6, 12, 10, 3][..]);
}

proptest! {
    #![proptest_config(pinned(0x5eed_0003, 32))]

    #[test]
    fn local_coefficients_on_the_circle((m, u) in modulus_and_involution()) {
        let t = twisted_circle(m, u);
        let (h0, h1) = circle_local_mod(m as i64, u);
        for (n, e) in [(0, &h0), (1, &h1)] {
            let first = equivariant_cohomology_with(t.as_ref(), n, RepChoice::First).unwrap();
            let last = equivariant_cohomology_with(t.as_ref(), n, RepChoice::Last).unwrap();
            prop_assert_eq!(first.normal_form(), e);
            prop_assert_eq!(last.normal_form(), e);
        }
        let c = TwistedComplex::new(t.as_ref(), 3, RepChoice::First).unwrap();
        prop_assert!(c.check_square_zero().is_ok());
    }

    #[test]
    fn lift_complex_agrees_on_twisted_circles((m, u) in modulus_and_involution()) {
        let t = twisted_circle(m, u);
        let c = crosscheck(t.as_ref(), 2).unwrap();
        prop_assert!(c.is_ok(), "{:?}", c.rows);
    }
}

#[test]
fn integer_circle_with_both_signs() {
    for (u, h0, h1) in [
        (1, NormalForm::new(1, &[]), NormalForm::new(1, &[])),
        (-1, NormalForm::new(0, &[]), NormalForm::new(0, &[2])),
    ] {
        let t = twisted_circle(0, u);
        assert_eq!(
            equivariant_cohomology_with(t.as_ref(), 0, RepChoice::First)
                .unwrap()
                .normal_form(),
            &h0
        );
        assert_eq!(
            equivariant_cohomology_with(t.as_ref(), 1, RepChoice::First)
                .unwrap()
                .normal_form(),
            &h1
        );
    }
}

/// Representative choice does not change cohomology on any bundled scenario.
#[test]
fn representatives_do_not_matter() {
    for s in eqtwist::fixtures::VALID {
        let t = s.parsed().unwrap().twist().unwrap();
        let top = t.space().complex().truncation();
        for n in 0..top {
            let a = equivariant_cohomology_with(t.as_ref(), n, RepChoice::First).unwrap();
            let b = equivariant_cohomology_with(t.as_ref(), n, RepChoice::Last).unwrap();
            assert_eq!(a.normal_form(), b.normal_form(), "{} H^{n}", s.name);
        }
    }
}
