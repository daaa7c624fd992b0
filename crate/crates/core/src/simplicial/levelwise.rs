//! Simplicial objects given levelwise by explicit face and degeneracy maps.

use std::collections::BTreeMap;
use std::fmt::Debug;

use super::complex::{FiniteSimplicialSet, SimplexRef};
use crate::error::Result;
use crate::report::ValidationReport;

/// A simplicial set presented by its structure maps.
///
/// `face(i, x)` requires `1 ≤ dim x` and `i ≤ dim x`; `degeneracy(j, x)`
/// requires `j ≤ dim x`. Implementations may panic otherwise.
pub trait SimplicialObject {
    type Simplex: Clone + Eq + Ord + Debug;

    fn dim(&self, x: &Self::Simplex) -> usize;
    fn face(&self, i: usize, x: &Self::Simplex) -> Self::Simplex;
    fn degeneracy(&self, j: usize, x: &Self::Simplex) -> Self::Simplex;

    fn label(&self, x: &Self::Simplex) -> String {
        format!("{x:?}")
    }

    /// `∂_{i_1} ∘ … ∘ ∂_{i_r}` applied to `x`, rightmost first.
    fn faces(&self, ops: &[usize], x: &Self::Simplex) -> Self::Simplex {
        let mut y = x.clone();
        for &i in ops.iter().rev() {
            y = self.face(i, &y);
        }
        y
    }

    fn is_degenerate(&self, x: &Self::Simplex) -> bool {
        let q = self.dim(x);
        (0..q).any(|j| &self.degeneracy(j, &self.face(j, x)) == x)
    }
}

/// Simplicial objects whose levels can be listed.
pub trait FiniteLevels: SimplicialObject {
    /// All `q`-simplices in a fixed order.
    fn simplices(&self, q: usize) -> Result<Vec<Self::Simplex>>;
}

/// Checks the simplicial identities on every simplex of dimension at most `q_max`.
///
/// Face-face identities use simplices of dimension `≤ q_max`; identities
/// involving degeneracies use sources of dimension `≤ q_max − 1` so that all
/// intermediate simplices stay within `q_max`.
pub fn validate_levelwise<S: FiniteLevels>(obj: &S, q_max: usize, subject: &str) -> Result<ValidationReport> {
    let mut rep = ValidationReport::new(subject);
    for q in 0..=q_max {
        let level = obj.simplices(q)?;
        for x in &level {
            rep.check(obj.dim(x) == q, "dimension", || {
                format!("{} listed in level {q}", obj.label(x))
            });
            for j in 0..if q >= 2 { q } else { 0 } {
                for i in j + 1..=q {
                    let lhs = obj.face(j, &obj.face(i, x));
                    let rhs = obj.face(i - 1, &obj.face(j, x));
                    rep.check(lhs == rhs, "face-face", || {
                        format!("d{j} d{i} != d{} d{j} on {}", i - 1, obj.label(x))
                    });
                }
            }
            if q + 1 > q_max {
                continue;
            }
            for j in 0..=q {
                let sx = obj.degeneracy(j, x);
                for i in 0..=q + 1 {
                    if q == 0 && i != j && i != j + 1 {
                        continue;
                    }
                    let lhs = obj.face(i, &sx);
                    let (rule, rhs) = if i < j {
                        ("face-degeneracy (i<j)", obj.degeneracy(j - 1, &obj.face(i, x)))
                    } else if i == j || i == j + 1 {
                        ("face-degeneracy (i=j,j+1)", x.clone())
                    } else {
                        ("face-degeneracy (i>j+1)", obj.degeneracy(j, &obj.face(i - 1, x)))
                    };
                    rep.check(lhs == rhs, rule, || format!("d{i} s{j} on {}", obj.label(x)));
                }
                if q + 2 > q_max {
                    continue;
                }
                for i in 0..=j {
                    let lhs = obj.degeneracy(i, &sx);
                    let rhs = obj.degeneracy(j + 1, &obj.degeneracy(i, x));
                    rep.check(lhs == rhs, "degeneracy-degeneracy", || {
                        format!("s{i} s{j} != s{} s{i} on {}", j + 1, obj.label(x))
                    });
                }
            }
        }
    }
    Ok(rep)
}

/// Explicit finite simplicial set with the same simplices up to `q_max`,
/// plus the normal form of every listed simplex.
pub struct Materialized<S: Ord> {
    pub complex: FiniteSimplicialSet,
    pub refs: BTreeMap<S, SimplexRef>,
}

impl<S: Ord + Debug> Materialized<S> {
    pub fn reference(&self, x: &S) -> &SimplexRef {
        self.refs
            .get(x)
            .unwrap_or_else(|| panic!("simplex {x:?} was not materialized"))
    }
}

/// Finds nondegenerate simplices level by level and records their faces in
/// normal form.
pub fn materialize<S: FiniteLevels>(obj: &S, q_max: usize) -> Result<Materialized<S::Simplex>> {
    let mut complex = FiniteSimplicialSet::new(q_max);
    let mut refs: BTreeMap<S::Simplex, SimplexRef> = BTreeMap::new();
    for q in 0..=q_max {
        for x in obj.simplices(q)? {
            if refs.contains_key(&x) {
                continue;
            }
            let degenerate_at = (0..q).rev().find(|&j| obj.degeneracy(j, &obj.face(j, &x)) == x);
            let r = match degenerate_at {
                Some(j) => {
                    let lower = &refs[&obj.face(j, &x)];
                    SimplexRef {
                        word: lower.word.then_apply(lower.base.dim, &[j])?,
                        base: lower.base,
                    }
                }
                None => {
                    let faces: Vec<SimplexRef> = if q == 0 {
                        Vec::new()
                    } else {
                        (0..=q).map(|i| refs[&obj.face(i, &x)].clone()).collect()
                    };
                    let mut name = obj.label(&x);
                    if complex.id(&name).is_some() {
                        name = format!("{name}#{}", complex.num_nondegenerate(q));
                    }
                    let id = complex.add_simplex_at(q, &name, faces)?;
                    SimplexRef::nondegenerate(id)
                }
            };
            refs.insert(x, r);
        }
    }
    Ok(Materialized { complex, refs })
}
