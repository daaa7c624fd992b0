//! Sublattices of `ℤ^m`, stored by an echelon basis.

use num_bigint::BigInt;

use super::echelon::{column_echelon, echelon_coordinates};
use super::matrix::IntMatrix;

/// A subgroup of `ℤ^ambient`.
///
/// `basis` has `ambient` rows and one column per basis vector, in column
/// echelon form with pivot rows `pivots`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: IntMatrix::zeros(ambient, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: IntMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of the columns of `gens`.
    pub fn span(gens: &IntMatrix) -> Self {
        let e = column_echelon(gens);
        Self {
            ambient: gens.rows(),
            basis: e.image(),
            pivots: e.pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Coordinates of `v` in [`Self::basis`], if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        echelon_coordinates(&self.basis, &self.pivots, v)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Whether every column of `m` lies in the lattice.
    pub fn contains_columns(&self, m: &IntMatrix) -> bool {
        (0..m.cols()).all(|j| self.contains(&m.column(j)))
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        other.contains_columns(&self.basis)
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient);
        Lattice::span(&self.basis.hstack(&other.basis))
    }

    pub fn intersection(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient);
        let k = self.rank();
        let joint = self.basis.hstack(&other.basis.neg());
        let ker = column_echelon(&joint).kernel();
        let top = ker.block(0, 0, k, ker.cols());
        Lattice::span(&self.basis.mul(&top))
    }

    /// `{x ∈ ℤ^cols : map·x ∈ target}`.
    pub fn preimage(map: &IntMatrix, target: &Lattice) -> Lattice {
        assert_eq!(map.rows(), target.ambient);
        let a = map.cols();
        let joint = map.hstack(&target.basis.neg());
        let ker = column_echelon(&joint).kernel();
        Lattice::span(&ker.block(0, 0, a, ker.cols()))
    }

    /// `map(self)`.
    pub fn image(&self, map: &IntMatrix) -> Lattice {
        assert_eq!(map.cols(), self.ambient);
        Lattice::span(&map.mul(&self.basis))
    }

    /// Relation matrix of `self / sub` in the coordinates of [`Self::basis`].
    ///
    /// Requires `sub ⊆ self`; returns `None` otherwise.
    pub fn quotient_relations(&self, sub: &Lattice) -> Option<IntMatrix> {
        let mut cols = Vec::with_capacity(sub.rank());
        for j in 0..sub.rank() {
            cols.push(self.coordinates(&sub.basis.column(j))?);
        }
        Some(IntMatrix::from_columns(self.rank(), &cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn intersection_of_multiples() {
        let a = Lattice::span(&IntMatrix::from_rows(&[[4]]));
        let b = Lattice::span(&IntMatrix::from_rows(&[[6]]));
        let c = a.intersection(&b);
        assert_eq!(c.basis(), &IntMatrix::from_rows(&[[12]]));
        assert_eq!(a.sum(&b).basis(), &IntMatrix::from_rows(&[[2]]));
    }

    #[test]
    fn preimage_of_relations() {
        // x ↦ 2x into ℤ/4: preimage of 4ℤ is 2ℤ
        let m = IntMatrix::from_rows(&[[2]]);
        let r = Lattice::span(&IntMatrix::from_rows(&[[4]]));
        let p = Lattice::preimage(&m, &r);
        assert!(p.contains(&v(&[2])));
        assert!(!p.contains(&v(&[1])));
    }

    #[test]
    fn quotient_requires_containment() {
        let full = Lattice::full(2);
        let sub = Lattice::span(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        let rel = full.quotient_relations(&sub).unwrap();
        assert_eq!(rel.shape(), (2, 2));
        assert!(sub.quotient_relations(&full).is_none());
    }
}
