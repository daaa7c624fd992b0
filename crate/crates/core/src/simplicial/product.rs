//! Cartesian products of finite simplicial sets, built from their
//! nondegenerate pairs.

use std::collections::BTreeMap;

use super::complex::{FiniteSimplicialSet, SimplexId, SimplexRef};
use super::maps::SimplicialMap;
use super::standard::standard_simplex;
use super::word::{combinations, DegeneracyWord};
use crate::error::Result;

/// `X × Y` with its generators identified as pairs `(η^*a, ζ^*b)` whose
/// degeneracy sets `J(η)`, `J(ζ)` are disjoint.
#[derive(Debug, Clone)]
pub struct Product {
    pub complex: FiniteSimplicialSet,
    pub left: FiniteSimplicialSet,
    pub right: FiniteSimplicialSet,
    components: Vec<Vec<(SimplexRef, SimplexRef)>>,
    lookup: BTreeMap<(SimplexRef, SimplexRef), SimplexId>,
}

/// Splits off the common degeneracies of two surjections on the same `[m]`.
fn split_common(eta: &[usize], zeta: &[usize]) -> (Vec<usize>, Vec<usize>, DegeneracyWord) {
    let m = eta.len() - 1;
    let common: Vec<usize> = (0..m)
        .filter(|&j| eta[j] == eta[j + 1] && zeta[j] == zeta[j + 1])
        .collect();
    let mut e = eta.to_vec();
    let mut z = zeta.to_vec();
    for &j in common.iter().rev() {
        e.remove(j + 1);
        z.remove(j + 1);
    }
    let mut word: Vec<usize> = common;
    word.reverse();
    (e, z, DegeneracyWord::new(word).expect("common positions are distinct"))
}

impl Product {
    pub fn new(left: &FiniteSimplicialSet, right: &FiniteSimplicialSet) -> Result<Self> {
        let top = left.truncation() + right.truncation();
        let mut complex = FiniteSimplicialSet::new(top);
        let mut components = vec![Vec::new(); top + 1];
        let mut lookup = BTreeMap::new();
        for m in 0..=top {
            for p in 0..=m.min(left.truncation()) {
                for r in 0..=m.min(right.truncation()) {
                    if p + r < m {
                        continue;
                    }
                    for a in left.nondegenerate(p) {
                        for b in right.nondegenerate(r) {
                            for ja in combinations(m, m - p) {
                                for jb in combinations(m, m - r) {
                                    if ja.iter().any(|j| jb.contains(j)) {
                                        continue;
                                    }
                                    let x = SimplexRef {
                                        word: DegeneracyWord::new(ja.iter().rev().copied().collect())?,
                                        base: a,
                                    };
                                    let y = SimplexRef {
                                        word: DegeneracyWord::new(jb.iter().rev().copied().collect())?,
                                        base: b,
                                    };
                                    let faces = if m == 0 {
                                        Vec::new()
                                    } else {
                                        let mut fs = Vec::with_capacity(m + 1);
                                        for i in 0..=m {
                                            let fx = left.face(i, &x)?;
                                            let fy = right.face(i, &y)?;
                                            fs.push(Self::normalize_with(&lookup, &fx, &fy));
                                        }
                                        fs
                                    };
                                    let name = format!("{}|{}", left.display(&x), right.display(&y));
                                    let id = complex.add_simplex_at(m, &name, faces)?;
                                    components[m].push((x.clone(), y.clone()));
                                    lookup.insert((x, y), id);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(Self {
            complex,
            left: left.clone(),
            right: right.clone(),
            components,
            lookup,
        })
    }

    fn normalize_with(
        lookup: &BTreeMap<(SimplexRef, SimplexRef), SimplexId>,
        x: &SimplexRef,
        y: &SimplexRef,
    ) -> SimplexRef {
        let eta = x.word.surjection(x.base.dim);
        let zeta = y.word.surjection(y.base.dim);
        let (e, z, word) = split_common(&eta, &zeta);
        let key = (
            SimplexRef {
                word: DegeneracyWord::from_surjection(&e),
                base: x.base,
            },
            SimplexRef {
                word: DegeneracyWord::from_surjection(&z),
                base: y.base,
            },
        );
        let base = *lookup
            .get(&key)
            .expect("nondegenerate pairs of lower dimension are registered first");
        SimplexRef { word, base }
    }

    /// The simplex `(x, y)` of the product; `x`, `y` must have equal dimension.
    pub fn pair(&self, x: &SimplexRef, y: &SimplexRef) -> SimplexRef {
        assert_eq!(x.dim(), y.dim(), "pair components must have equal dimension");
        Self::normalize_with(&self.lookup, x, y)
    }

    /// Components of an arbitrary product simplex.
    pub fn components(&self, z: &SimplexRef) -> (SimplexRef, SimplexRef) {
        let (x, y) = &self.components[z.base.dim][z.base.index];
        let mut x = x.clone();
        let mut y = y.clone();
        for &j in z.word.indices().iter().rev() {
            x = self.left.degeneracy(j, &x).expect("in range");
            y = self.right.degeneracy(j, &y).expect("in range");
        }
        (x, y)
    }

    pub fn projection_left(&self) -> SimplicialMap {
        SimplicialMap::from_fn(&self.complex, |id| self.components[id.dim][id.index].0.clone())
    }

    pub fn projection_right(&self) -> SimplicialMap {
        SimplicialMap::from_fn(&self.complex, |id| self.components[id.dim][id.index].1.clone())
    }
}

/// `X × Δ[1]` with its end inclusions and projection.
#[derive(Debug, Clone)]
pub struct Cylinder {
    pub product: Product,
    /// `i_0`, `i_1`: `X → X × Δ[1]` at the two ends.
    pub i0: SimplicialMap,
    pub i1: SimplicialMap,
    /// `pr_1: X × Δ[1] → X`.
    pub pr1: SimplicialMap,
}

impl Cylinder {
    pub fn complex(&self) -> &FiniteSimplicialSet {
        &self.product.complex
    }
}

/// The constant `n`-simplex of `Δ[1]` at vertex `end`.
fn constant(interval: &FiniteSimplicialSet, end: usize, n: usize) -> SimplexRef {
    let v = interval.vertex(&format!("({end})")).expect("interval has both ends");
    let ops: Vec<usize> = (0..n).collect();
    SimplexRef {
        word: v.word.then_apply(0, &ops).expect("degeneracies of a vertex"),
        base: v.base,
    }
}

pub fn product_with_interval(x: &FiniteSimplicialSet) -> Result<Cylinder> {
    let interval = standard_simplex(1);
    let product = Product::new(x, &interval)?;
    let end = |e: usize| {
        SimplicialMap::from_fn(x, |id| {
            product.pair(&SimplexRef::nondegenerate(id), &constant(&interval, e, id.dim))
        })
    };
    let i0 = end(0);
    let i1 = end(1);
    let pr1 = product.projection_left();
    Ok(Cylinder { product, i0, i1, pr1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::maps::validate_map;

    #[test]
    fn square_has_two_triangles() {
        let d1 = standard_simplex(1);
        let p = Product::new(&d1, &d1).unwrap();
        assert_eq!(p.complex.counts(), vec![4, 5, 2]);
        assert!(p.complex.validate().is_ok());
    }

    #[test]
    fn point_times_interval() {
        let d0 = standard_simplex(0);
        let c = product_with_interval(&d0).unwrap();
        assert_eq!(c.complex().counts(), vec![2, 1]);
        assert!(validate_map(&d0, c.complex(), &c.i0).is_ok());
        assert!(validate_map(c.complex(), &d0, &c.pr1).is_ok());
    }
}
