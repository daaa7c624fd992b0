//! Finitely presented abelian groups and homomorphisms between them.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use super::echelon::column_echelon;
use super::lattice::Lattice;
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// Isomorphism type `ℤ^rank ⊕ ⊕ ℤ/d_i` with `2 ≤ d_1 | d_2 | …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl NormalForm {
    pub fn trivial() -> Self {
        Self {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn new(rank: usize, torsion: &[u64]) -> Self {
        Self {
            rank,
            torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

struct Torsion<'a>(&'a [BigInt]);

impl Serialize for Torsion<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for d in self.0 {
            match d.to_u64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&d.to_string())?,
            }
        }
        seq.end()
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NormalForm", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion", &Torsion(&self.torsion))?;
        st.end()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug)]
struct Inner {
    n_gens: usize,
    relations: IntMatrix,
    relation_lattice: Lattice,
    /// `u · relations · v` is diagonal.
    u: IntMatrix,
    u_inv: IntMatrix,
    /// Per generator of the diagonal basis: its order, 0 when free.
    orders: Vec<BigInt>,
    normal_form: NormalForm,
}

/// The abelian group `ℤ^n_gens / span(relations)`.
///
/// Relators are the columns of `relations`. The Smith form is computed on
/// construction; `canonical` reduces an element to coordinates in the
/// diagonal basis, which makes equality of elements decidable.
#[derive(Clone)]
pub struct FgAbGroup {
    inner: Arc<Inner>,
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup(gens={}, {})", self.inner.n_gens, self.inner.normal_form)
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.normal_form)
    }
}

/// Two groups are equal when they are the same quotient of the same `ℤ^n`.
impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.n_gens == other.inner.n_gens && self.inner.relation_lattice == other.inner.relation_lattice)
    }
}

impl Eq for FgAbGroup {}

impl FgAbGroup {
    pub fn new(n_gens: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != n_gens {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} rows for {} generators",
                relations.rows(),
                n_gens
            )));
        }
        let relation_lattice = Lattice::span(&relations);
        // Smith form of the reduced basis: same lattice, fewer columns.
        let snf = smith_normal_form(relation_lattice.basis());
        let diag = snf.diagonal();
        let mut orders = vec![BigInt::zero(); n_gens];
        for (i, d) in diag.iter().enumerate() {
            orders[i] = d.clone();
        }
        let rank = orders.iter().filter(|d| d.is_zero()).count();
        let torsion = orders.iter().filter(|d| *d > &BigInt::one()).cloned().collect();
        Ok(Self {
            inner: Arc::new(Inner {
                n_gens,
                relations,
                relation_lattice,
                u: snf.u,
                u_inv: snf.u_inv,
                orders,
                normal_form: NormalForm { rank, torsion },
            }),
        })
    }

    pub fn free(n: usize) -> Self {
        Self::new(n, IntMatrix::zeros(n, 0)).expect("shape is consistent")
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `ℤ/d`, with `d = 0` giving `ℤ`.
    pub fn cyclic(d: u64) -> Self {
        if d == 0 {
            return Self::free(1);
        }
        Self::new(1, IntMatrix::from_rows(&[[d as i64]])).expect("shape is consistent")
    }

    /// `ℤ^rank ⊕ ℤ/t_1 ⊕ …` on `rank + torsion.len()` generators.
    pub fn from_invariants(rank: usize, torsion: &[u64]) -> Self {
        let parts: Vec<FgAbGroup> = std::iter::repeat_with(|| Self::cyclic(0))
            .take(rank)
            .chain(torsion.iter().map(|&d| Self::cyclic(d)))
            .collect();
        Self::direct_sum(&parts)
    }

    pub fn direct_sum(parts: &[FgAbGroup]) -> Self {
        let n: usize = parts.iter().map(|g| g.n_gens()).sum();
        let rels: Vec<IntMatrix> = parts.iter().map(|g| g.relations().clone()).collect();
        let rel = IntMatrix::block_diag(&rels);
        debug_assert_eq!(rel.rows(), n);
        Self::new(n, rel).expect("block diagonal shape is consistent")
    }

    pub fn power(&self, k: usize) -> Self {
        Self::direct_sum(&vec![self.clone(); k])
    }

    pub fn n_gens(&self) -> usize {
        self.inner.n_gens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.inner.relations
    }

    pub fn relation_lattice(&self) -> &Lattice {
        &self.inner.relation_lattice
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.inner.normal_form
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.normal_form.is_trivial()
    }

    pub fn is_finite(&self) -> bool {
        self.inner.normal_form.rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(self.inner.normal_form.torsion.iter().product())
    }

    /// Every generator has order dividing the returned exponent; `None` when infinite.
    pub fn exponent(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(
            self.inner
                .normal_form
                .torsion
                .last()
                .cloned()
                .unwrap_or_else(BigInt::one),
        )
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.n_gens()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<BigInt> {
        let mut v = self.zero();
        v[i] = BigInt::one();
        v
    }

    /// Coordinates in the diagonal basis, reduced into `[0, d_i)` on torsion
    /// summands and zero on trivial ones. Equal elements give equal vectors.
    pub fn canonical(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.n_gens(), "element length");
        let y = self.inner.u.mul_vec(x);
        y.into_iter()
            .zip(&self.inner.orders)
            .map(|(c, d)| if d.is_zero() { c } else { c.mod_floor(d) })
            .collect()
    }

    pub fn is_zero(&self, x: &[BigInt]) -> bool {
        self.inner.relation_lattice.contains(x)
    }

    pub fn eq_elements(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let d: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero(&d)
    }

    /// A short representative of `x` (inverse image of its canonical coordinates).
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.inner.u_inv.mul_vec(&self.canonical(x))
    }

    pub fn add(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        self.reduce(&x.iter().zip(y).map(|(a, b)| a + b).collect::<Vec<_>>())
    }

    pub fn neg(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.reduce(&x.iter().map(|a| -a).collect::<Vec<_>>())
    }

    /// Sizes of the nontrivial cyclic factors of the diagonal basis, 0 for free ones.
    fn factor_orders(&self) -> Vec<(usize, BigInt)> {
        self.inner
            .orders
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_one())
            .map(|(i, d)| (i, d.clone()))
            .collect()
    }

    /// All elements of a finite group as reduced representatives, in a fixed order.
    pub fn elements(&self, budget: usize) -> Result<Vec<Vec<BigInt>>> {
        let order = self
            .order()
            .ok_or_else(|| Error::Invalid(format!("cannot enumerate infinite group {self}")))?;
        if order > BigInt::from(budget) {
            return Err(Error::Budget(format!(
                "group of order {order} exceeds enumeration budget {budget}"
            )));
        }
        let factors = self.factor_orders();
        let mut out = Vec::new();
        let mut digits = vec![BigInt::zero(); factors.len()];
        loop {
            let mut y = self.zero();
            for ((i, _), c) in factors.iter().zip(&digits) {
                y[*i] = c.clone();
            }
            out.push(self.inner.u_inv.mul_vec(&y));
            let mut k = 0;
            loop {
                if k == factors.len() {
                    return Ok(out);
                }
                digits[k] += 1;
                if digits[k] == factors[k].1 {
                    digits[k] = BigInt::zero();
                    k += 1;
                } else {
                    break;
                }
            }
        }
    }

    /// Index of `x` in the order produced by [`Self::elements`].
    pub fn element_index(&self, x: &[BigInt]) -> Option<usize> {
        if !self.is_finite() {
            return None;
        }
        let c = self.canonical(x);
        let mut idx = 0usize;
        let mut scale = 1usize;
        for (i, d) in self.factor_orders() {
            let digit = c[i].to_usize()?;
            idx += digit * scale;
            scale *= d.to_usize()?;
        }
        Some(idx)
    }

    /// `l1 / l2` for sublattices `l2 ⊆ l1` of `ℤ^m`, with generators the basis of `l1`.
    pub fn subquotient(l1: &Lattice, l2: &Lattice) -> Result<FgAbGroup> {
        let rel = l1
            .quotient_relations(l2)
            .ok_or_else(|| Error::Internal("subquotient denominator is not contained in numerator".into()))?;
        FgAbGroup::new(l1.rank(), rel)
    }
}

/// Homomorphism given by an integer matrix on generators
/// (`target.n_gens × source.n_gens`).
#[derive(Debug, Clone)]
pub struct AbHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl AbHom {
    /// Checks shape and that relators of the source map into relators of the target.
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.shape() != (target.n_gens(), source.n_gens()) {
            return Err(Error::DimensionMismatch(format!(
                "hom matrix {:?} for {} -> {} generators",
                matrix.shape(),
                source.n_gens(),
                target.n_gens()
            )));
        }
        let h = Self { source, target, matrix };
        if !h.is_well_defined() {
            return Err(Error::Invalid(format!(
                "matrix does not carry relations of {} into relations of {}",
                h.source, h.target
            )));
        }
        Ok(h)
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        Self {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.n_gens()),
        }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.n_gens(), source.n_gens()),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_well_defined(&self) -> bool {
        let image = self.matrix.mul(self.source.relations());
        self.target.relation_lattice().contains_columns(&image)
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &AbHom) -> Result<AbHom> {
        if first.target != self.source {
            return Err(Error::DimensionMismatch(
                "composite of homomorphisms with mismatched middle group".into(),
            ));
        }
        Ok(AbHom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        })
    }

    /// Equality as maps: same endpoints and the difference lands in the target relations.
    pub fn equals(&self, other: &AbHom) -> bool {
        self.source == other.source
            && self.target == other.target
            && self
                .target
                .relation_lattice()
                .contains_columns(&self.matrix.sub(&other.matrix))
    }

    pub fn is_zero(&self) -> bool {
        self.target.relation_lattice().contains_columns(&self.matrix)
    }

    /// Kernel lattice in `ℤ^{source gens}`; it contains the source relations.
    pub fn kernel_lattice(&self) -> Lattice {
        Lattice::preimage(&self.matrix, self.target.relation_lattice())
    }

    pub fn kernel(&self) -> FgAbGroup {
        FgAbGroup::subquotient(&self.kernel_lattice(), self.source.relation_lattice())
            .expect("well-defined homomorphism kernel contains source relations")
    }

    /// Image lattice in `ℤ^{target gens}`, including target relations.
    pub fn image_lattice(&self) -> Lattice {
        Lattice::span(&self.matrix.hstack(self.target.relations()))
    }

    pub fn image(&self) -> FgAbGroup {
        FgAbGroup::subquotient(&self.image_lattice(), self.target.relation_lattice())
            .expect("image contains target relations")
    }

    pub fn cokernel(&self) -> FgAbGroup {
        FgAbGroup::new(self.target.n_gens(), self.target.relations().hstack(&self.matrix)).expect("shape is consistent")
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// The inverse homomorphism, if `self` is an isomorphism.
    pub fn inverse(&self) -> Option<AbHom> {
        if !self.is_iso() {
            return None;
        }
        let joint = self.matrix.hstack(self.target.relations());
        let e = column_echelon(&joint);
        let s = self.source.n_gens();
        let mut cols = Vec::with_capacity(self.target.n_gens());
        for j in 0..self.target.n_gens() {
            let x = e.solve(&self.target.basis_vector(j))?;
            cols.push(self.source.reduce(&x[..s]));
        }
        Some(AbHom {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: IntMatrix::from_columns(s, &cols),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentations_of_z6_agree() {
        let a = FgAbGroup::cyclic(6);
        let b = FgAbGroup::from_invariants(0, &[2, 3]);
        assert_eq!(a.normal_form(), b.normal_form());
        assert_eq!(a.normal_form(), &NormalForm::new(0, &[6]));
    }

    #[test]
    fn unit_relators_vanish() {
        let g = FgAbGroup::new(2, IntMatrix::from_rows(&[[1, 0], [0, 0]])).unwrap();
        assert_eq!(g.normal_form(), &NormalForm::new(1, &[]));
    }

    #[test]
    fn enumeration_and_index_agree() {
        let g = FgAbGroup::from_invariants(0, &[2, 4]);
        let els = g.elements(100).unwrap();
        assert_eq!(els.len(), 8);
        for (i, x) in els.iter().enumerate() {
            assert_eq!(g.element_index(x), Some(i));
        }
    }

    #[test]
    fn multiplication_by_minus_two_on_z4() {
        let z4 = FgAbGroup::cyclic(4);
        let h = AbHom::new(z4.clone(), z4.clone(), IntMatrix::from_rows(&[[-2]])).unwrap();
        assert_eq!(h.kernel().normal_form(), &NormalForm::new(0, &[2]));
        assert_eq!(h.cokernel().normal_form(), &NormalForm::new(0, &[2]));
        assert!(!h.is_iso());
        let neg = AbHom::new(z4.clone(), z4.clone(), IntMatrix::from_rows(&[[-1]])).unwrap();
        let inv = neg.inverse().unwrap();
        assert!(inv.after(&neg).unwrap().equals(&AbHom::identity(&z4)));
    }

    #[test]
    fn ill_defined_matrix_rejected() {
        let z2 = FgAbGroup::cyclic(2);
        let z = FgAbGroup::free(1);
        assert!(AbHom::new(z2, z, IntMatrix::from_rows(&[[1]])).is_err());
    }
}
