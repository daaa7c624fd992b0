//! Cochain complexes of finitely presented abelian groups.

use super::group::{AbHom, FgAbGroup};
use super::lattice::Lattice;
use crate::error::{Error, Result};

/// `C^0 → C^1 → … → C^top`, with `differentials[n]: C^n → C^{n+1}`.
#[derive(Debug, Clone)]
pub struct CochainComplex {
    groups: Vec<FgAbGroup>,
    differentials: Vec<AbHom>,
}

impl CochainComplex {
    /// Checks that consecutive differentials match and compose to zero.
    pub fn new(groups: Vec<FgAbGroup>, differentials: Vec<AbHom>) -> Result<Self> {
        if groups.is_empty() || differentials.len() + 1 != groups.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} groups need {} differentials, got {}",
                groups.len(),
                groups.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (n, d) in differentials.iter().enumerate() {
            if d.source() != &groups[n] || d.target() != &groups[n + 1] {
                return Err(Error::DimensionMismatch(format!(
                    "differential {n} does not run between the declared groups"
                )));
            }
        }
        for n in 1..differentials.len() {
            let dd = differentials[n].after(&differentials[n - 1])?;
            if !dd.is_zero() {
                return Err(Error::NotAComplex(format!("d^{n} after d^{} is nonzero", n - 1)));
            }
        }
        Ok(Self { groups, differentials })
    }

    pub fn top_degree(&self) -> usize {
        self.groups.len() - 1
    }

    pub fn group(&self, n: usize) -> &FgAbGroup {
        &self.groups[n]
    }

    pub fn differential(&self, n: usize) -> &AbHom {
        &self.differentials[n]
    }

    /// Cocycle lattice in `ℤ^{gens of C^n}`: elements whose coboundary vanishes.
    pub fn cocycle_lattice(&self, n: usize) -> Lattice {
        match self.differentials.get(n) {
            Some(d) => d.kernel_lattice(),
            None => Lattice::full(self.groups[n].n_gens()),
        }
    }

    /// Coboundaries plus relations of `C^n`, as a lattice in `ℤ^{gens of C^n}`.
    pub fn coboundary_lattice(&self, n: usize) -> Lattice {
        let rel = self.groups[n].relation_lattice().clone();
        if n == 0 {
            return rel;
        }
        self.differentials[n - 1].image_lattice()
    }

    /// `ker δ^n / im δ^{n-1}`; the top degree has no outgoing differential.
    pub fn cohomology_at(&self, n: usize) -> Result<FgAbGroup> {
        if n > self.top_degree() {
            return Err(Error::IndexOutOfRange(format!(
                "degree {n} above top degree {}",
                self.top_degree()
            )));
        }
        FgAbGroup::subquotient(&self.cocycle_lattice(n), &self.coboundary_lattice(n))
    }
}

/// Cohomology at degree `n` of the complex given by `groups` and `differentials`.
pub fn cohomology_at(groups: Vec<FgAbGroup>, differentials: Vec<AbHom>, n: usize) -> Result<FgAbGroup> {
    CochainComplex::new(groups, differentials)?.cohomology_at(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::group::NormalForm;
    use crate::abelian::matrix::IntMatrix;

    #[test]
    fn integer_multiplication_by_minus_two() {
        let z = FgAbGroup::free(1);
        let d = AbHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[[-2]])).unwrap();
        let c = CochainComplex::new(vec![z.clone(), z], vec![d]).unwrap();
        assert!(c.cohomology_at(0).unwrap().is_trivial());
        assert_eq!(c.cohomology_at(1).unwrap().normal_form(), &NormalForm::new(0, &[2]));
    }

    #[test]
    fn zero_differentials_return_groups() {
        let a = FgAbGroup::from_invariants(1, &[3]);
        let b = FgAbGroup::cyclic(4);
        let d = AbHom::zero(&a, &b);
        let c = CochainComplex::new(vec![a.clone(), b.clone()], vec![d]).unwrap();
        assert_eq!(c.cohomology_at(0).unwrap().normal_form(), a.normal_form());
        assert_eq!(c.cohomology_at(1).unwrap().normal_form(), b.normal_form());
    }

    #[test]
    fn torsion_source_kernel() {
        let z4 = FgAbGroup::cyclic(4);
        let d = AbHom::new(z4.clone(), z4.clone(), IntMatrix::from_rows(&[[-2]])).unwrap();
        let c = CochainComplex::new(vec![z4.clone(), z4], vec![d]).unwrap();
        assert_eq!(c.cohomology_at(0).unwrap().normal_form(), &NormalForm::new(0, &[2]));
    }

    #[test]
    fn non_complex_rejected() {
        let z = FgAbGroup::free(1);
        let one = AbHom::identity(&z);
        let err = CochainComplex::new(vec![z.clone(), z.clone(), z], vec![one.clone(), one]);
        assert!(matches!(err, Err(Error::NotAComplex(_))));
    }
}
