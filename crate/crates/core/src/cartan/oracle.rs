//! Brute-force vertical homotopies between cocycle lifts.
//!
//! A vertical homotopy `f ∼_v g` is a cocycle lift over `X × Δ[1]`, twisted
//! through the projection to `X`, that restricts to `f` and `g` at the ends.
//! The search assigns a cocycle to each orbit representative of the cylinder in
//! dimension order and prunes on the simpliciality conditions; nothing is solved
//! linearly, so the result is independent of the lattice computations.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::abelian::AbHom;
use crate::equivariant::RepChoice;
use crate::error::{Error, Result};
use crate::simplicial::{SimplexId, SimplexRef};
use crate::twisting::function::derived_value;
use crate::twisting::Twist;

use super::lift::{conditions, enumerate_quotient, Layout, LiftComplex};
use super::theory::CartanTheory;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homotopy {
    Homotopic,
    NotHomotopic,
    /// The candidate budget ran out before the search finished.
    Inconclusive,
}

/// Whether cocycle lifts `f`, `g` of degree `n` (coordinates in the degree-`n`
/// layout of `X` with first representatives) are vertically homotopic.
///
/// The theory must reach level `dim X + 1` and degree `n + 1`; `budget` bounds
/// the number of candidate values examined.
pub fn vertical_homotopy_oracle(
    twist: &dyn Twist,
    theory: &CartanTheory,
    n: usize,
    f: &[BigInt],
    g: &[BigInt],
    budget: usize,
) -> Result<Homotopy> {
    if n >= theory.i_max() {
        return Err(Error::InsufficientTruncation(format!(
            "cocycles of degree {n} need A^{}",
            n + 1
        )));
    }
    let x = twist.space();
    let (cx, cyl) = x.product_with_interval()?;
    let lx = Layout::new(x, theory, n, RepChoice::First)?;
    let lc = Layout::new(&cx, theory, n, RepChoice::First)?;
    for v in [f, g] {
        if v.len() != lx.width() {
            return Err(Error::DimensionMismatch(
                "lift coordinates do not match the layout".into(),
            ));
        }
    }
    let alpha = |h: usize, z: SimplexId| -> Result<AbHom> {
        let y = cyl.pr1.value(z);
        let id = AbHom::identity(twist.coefficients().value(h));
        derived_value(y, Ok(id), || twist.action(h, y.base))
    };
    let conds = conditions(&cx, theory, &lc, &alpha)?;

    let mut ends: BTreeMap<SimplexId, (usize, SimplexId)> = BTreeMap::new();
    for id in x.complex().all_nondegenerate() {
        ends.insert(cyl.i0.value(id).base, (0, id));
        ends.insert(cyl.i1.value(id).base, (1, id));
    }

    let a = theory.group(n);
    let next = theory.group(n + 1);
    let is_cocycle = |h: usize, q: usize, v: &[BigInt]| next.value(h).level(q).is_zero(&theory.delta(n, h, q).apply(v));

    let blocks: Vec<_> = lc.all_blocks().map(|(q, b)| (q, b.clone())).collect();
    let mut choices: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(blocks.len());
    for (q, b) in &blocks {
        let h = b.stabilizer;
        let level = a.value(h).level(*q);
        let cands = match ends.get(&b.rep) {
            Some(&(end, xid)) => {
                let v = if end == 0 { f } else { g };
                let e = lx.evaluation(x, theory, h, &SimplexRef::nondegenerate(xid))?;
                let val = level.reduce(&e.mul_vec(v));
                if !is_cocycle(h, *q, &val) {
                    return Err(Error::Invalid("the end values are not cocycle lifts".into()));
                }
                vec![val]
            }
            None => level
                .elements(budget)?
                .into_iter()
                .filter(|v| is_cocycle(h, *q, v))
                .collect(),
        };
        choices.push(cands);
    }
    let by_rep: Vec<Vec<usize>> = blocks
        .iter()
        .map(|(_, b)| (0..conds.len()).filter(|&c| conds[c].rep == b.rep).collect())
        .collect();

    struct Search<'a> {
        blocks: &'a [(usize, super::lift::LiftBlock)],
        choices: &'a [Vec<Vec<BigInt>>],
        by_rep: &'a [Vec<usize>],
        conds: &'a [super::lift::Condition],
        budget: usize,
    }

    fn go(s: &Search<'_>, k: usize, vec: &mut Vec<BigInt>, spent: &mut usize) -> Option<bool> {
        if k == s.blocks.len() {
            return Some(true);
        }
        let b = &s.blocks[k].1;
        for cand in &s.choices[k] {
            *spent += 1;
            if *spent > s.budget {
                return None;
            }
            vec[b.offset..b.offset + b.width].clone_from_slice(cand);
            let fits = s.by_rep[k].iter().all(|&c| {
                let cond = &s.conds[c];
                cond.target.is_zero(&cond.matrix.mul_vec(vec))
            });
            if fits && go(s, k + 1, vec, spent)? {
                return Some(true);
            }
        }
        for v in &mut vec[b.offset..b.offset + b.width] {
            *v = BigInt::from(0);
        }
        Some(false)
    }

    let s = Search {
        blocks: &blocks,
        choices: &choices,
        by_rep: &by_rep,
        conds: &conds,
        budget,
    };
    let mut vec = vec![BigInt::from(0); lc.width()];
    let mut spent = 0;
    Ok(match go(&s, 0, &mut vec, &mut spent) {
        Some(true) => Homotopy::Homotopic,
        Some(false) => Homotopy::NotHomotopic,
        None => Homotopy::Inconclusive,
    })
}

/// Outcome of comparing `{f : f ∼_v 0}` with `im δ̄^{n−1}` over all cocycle lifts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HomotopyComparison {
    pub cocycles: usize,
    pub in_image: usize,
    pub homotopic_to_zero: usize,
    pub inconclusive: usize,
    /// Lifts (as coordinate vectors) on which the two sides disagree.
    pub mismatches: Vec<Vec<BigInt>>,
}

impl HomotopyComparison {
    pub fn is_exact(&self) -> bool {
        self.mismatches.is_empty() && self.inconclusive == 0
    }
}

/// Runs the oracle against `0` on every cocycle lift of degree `n` and compares
/// with membership in `im δ̄^{n−1}`. Needs finite lift groups.
pub fn compare_with_image(
    twist: &dyn Twist,
    theory: &CartanTheory,
    n: usize,
    budget: usize,
) -> Result<HomotopyComparison> {
    let lifts = LiftComplex::new(twist, theory, n + 1, RepChoice::First)?;
    let rel = lifts.layouts[n].ambient.relation_lattice().clone();
    let image = lifts.coboundary_lattice(n);
    let zero = vec![BigInt::from(0); lifts.layouts[n].width()];
    let mut out = HomotopyComparison::default();
    for f in enumerate_quotient(&lifts.cocycle_lattice(n), &rel, budget)? {
        out.cocycles += 1;
        let in_image = image.contains(&f);
        out.in_image += usize::from(in_image);
        match vertical_homotopy_oracle(twist, theory, n, &f, &zero, budget)? {
            Homotopy::Inconclusive => out.inconclusive += 1,
            h => {
                let homotopic = h == Homotopy::Homotopic;
                out.homotopic_to_zero += usize::from(homotopic);
                if homotopic != in_image {
                    out.mismatches.push(f);
                }
            }
        }
    }
    Ok(out)
}

/// The block slices of a lift vector, in layout order.
pub fn block_values(layout: &Layout, v: &[BigInt]) -> Vec<Vec<BigInt>> {
    layout
        .all_blocks()
        .map(|(_, b)| v[b.offset..b.offset + b.width].to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn circle_z2_nonzero_lift_is_not_null_homotopic() {
        let t = fixtures::CIRCLE_Z2.parsed().unwrap().twist().unwrap();
        let theory = CartanTheory::canonical(t.coefficients(), 2, 2).unwrap();
        let c = compare_with_image(t.as_ref(), &theory, 1, 1 << 16).unwrap();
        assert_eq!((c.cocycles, c.in_image, c.homotopic_to_zero), (2, 1, 1));
        assert!(c.is_exact(), "{c:?}");
    }

    #[test]
    fn equal_ends_are_homotopic() {
        let t = fixtures::CIRCLE_Z2.parsed().unwrap().twist().unwrap();
        let theory = CartanTheory::canonical(t.coefficients(), 2, 2).unwrap();
        let lifts = LiftComplex::new(t.as_ref(), &theory, 2, RepChoice::First).unwrap();
        let rel = lifts.layouts[1].ambient.relation_lattice().clone();
        for f in enumerate_quotient(&lifts.cocycle_lattice(1), &rel, 64).unwrap() {
            let r = vertical_homotopy_oracle(t.as_ref(), &theory, 1, &f, &f, 1 << 16).unwrap();
            assert_eq!(r, Homotopy::Homotopic);
        }
    }
}
