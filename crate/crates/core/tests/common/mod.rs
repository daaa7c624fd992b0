//! Independent oracles for the integration and acceptance tests.
//!
//! Everything here works over `i64` with its own elimination and never calls
//! the library's lattice or Smith normal form code.

#![allow(dead_code)]

use eqtwist::abelian::NormalForm;
use eqtwist::equivariant::GSimplicialSet;
use eqtwist::fixtures;
use eqtwist::io;
use eqtwist::simplicial::{FiniteSimplicialSet, SimplexRef};

pub type Mat = Vec<Vec<i64>>;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Nonzero diagonal of a Smith normal form, as a divisibility chain of positive integers.
pub fn invariant_factors(m: &Mat) -> Vec<i64> {
    let mut a = m.clone();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t] / a[t][t];
            for j in t..cols {
                a[i][j] -= q * a[t][j];
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = a[t][j] / a[t][t];
            for row in a.iter_mut().skip(t) {
                row[j] -= q * row[t];
            }
            clean &= a[t][j] == 0;
        }
        if clean {
            diag.push(a[t][t].abs());
            t += 1;
        }
    }
    // (a, b) -> (gcd, lcm) until the chain divides
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = gcd(diag[i], diag[j]);
            let l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

pub fn rank(m: &Mat) -> usize {
    invariant_factors(m).len()
}

/// `H^n` of the integer cochain complex with coboundaries `d[k]: C^k -> C^{k+1}`
/// (`dims[k]` columns each).
pub fn cohomology_of(dims: &[usize], d: &[Mat], n: usize) -> NormalForm {
    let out = if n < d.len() { rank(&d[n]) } else { 0 };
    let (inc_rank, torsion) = if n == 0 {
        (0, vec![])
    } else {
        let f = invariant_factors(&d[n - 1]);
        let t: Vec<u64> = f.iter().filter(|&&x| x > 1).map(|&x| x as u64).collect();
        (f.len(), t)
    };
    NormalForm::new(dims[n] - out - inc_rank, &torsion)
}

/// Normalized integer coboundaries of `X` up to degree `top`.
pub fn integer_coboundaries(x: &FiniteSimplicialSet, top: usize) -> (Vec<usize>, Vec<Mat>) {
    let dims: Vec<usize> = (0..=top + 1).map(|n| x.num_nondegenerate(n)).collect();
    let mut d = Vec::new();
    for n in 0..=top {
        let mut m = vec![vec![0i64; dims[n]]; dims[n + 1]];
        for z in x.nondegenerate(n + 1) {
            for i in 0..=n + 1 {
                let f = x.face(i, &SimplexRef::nondegenerate(z)).unwrap();
                if !f.is_degenerate() {
                    m[z.index][f.base.index] += if i % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        d.push(m);
    }
    (dims, d)
}

/// Integer cohomology of `X` with trivial coefficients.
pub fn classical_cohomology(x: &FiniteSimplicialSet, n: usize) -> NormalForm {
    let (dims, d) = integer_coboundaries(x, n + 1);
    cohomology_of(&dims, &d, n)
}

/// Cohomology of `G`-invariant integer cochains, i.e. of the orbit complex
/// `X/G`: one coordinate per orbit of nondegenerate simplices.
pub fn orbit_cohomology(x: &GSimplicialSet, n: usize) -> NormalForm {
    let c = x.complex();
    let g = x.orbit_category().group().clone();
    let orbit_of =
        |id: eqtwist::simplicial::SimplexId| -> usize { g.elements().map(|u| x.act_id(u, id).index).min().unwrap() };
    let reps = |k: usize| -> Vec<usize> {
        let mut r: Vec<usize> = c.nondegenerate(k).map(orbit_of).collect();
        r.sort_unstable();
        r.dedup();
        r
    };
    let top = n + 1;
    let all: Vec<Vec<usize>> = (0..=top + 1).map(reps).collect();
    let dims: Vec<usize> = all.iter().map(Vec::len).collect();
    let mut d = Vec::new();
    for k in 0..=top {
        let mut m = vec![vec![0i64; dims[k]]; dims[k + 1]];
        for (row, &zi) in all[k + 1].iter().enumerate() {
            let z = c.nondegenerate(k + 1).find(|s| s.index == zi).unwrap();
            for i in 0..=k + 1 {
                let f = c.face(i, &SimplexRef::nondegenerate(z)).unwrap();
                if !f.is_degenerate() {
                    let col = all[k].iter().position(|&o| o == orbit_of(f.base)).unwrap();
                    m[row][col] += if i % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        d.push(m);
    }
    cohomology_of(&dims, &d, n)
}

pub fn complex(name: &str) -> FiniteSimplicialSet {
    let text = fixtures::file(name).expect("bundled fixture");
    io::complex_from_json(&io::parse(text, name).unwrap()).unwrap()
}

pub fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// `Z/m` cohomology of the one-vertex circle with the loop acting by `u`:
/// `δ^0 = u^{-1} - 1` as a 1×1 matrix, counted by brute force.
pub fn circle_local_mod(m: i64, u_inv: i64) -> (NormalForm, NormalForm) {
    let d = (u_inv - 1).rem_euclid(m);
    let ker = (0..m).filter(|x| (d * x) % m == 0).count() as i64;
    let image = (0..m)
        .map(|x| (d * x) % m)
        .collect::<std::collections::BTreeSet<_>>()
        .len() as i64;
    let coker = m / image;
    (cyclic_form(ker), cyclic_form(coker))
}

/// Normal form of a finite cyclic group of order `k`.
pub fn cyclic_form(k: i64) -> NormalForm {
    if k == 1 {
        NormalForm::new(0, &[])
    } else {
        NormalForm::new(0, &[k as u64])
    }
}
