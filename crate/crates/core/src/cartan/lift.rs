//! The lift complex `A_φ^*(X; τ)` in orbit coordinates.
//!
//! A lift of degree `n` picks `c_σ ∈ A^n(G/G_σ)_q` for every orbit
//! representative `σ` of nondegenerate `q`-simplices. Other simplices are
//! reached as in the Bredon evaluation rule, `c(g s_w σ) = s_w A^n(ĝ) c_σ`.
//! Simpliciality of the lift reduces to linear conditions at each representative:
//!
//! * `∂_0 c_σ = ψφ(τ(σ))^{-1} c(∂_0 σ)`,
//! * `∂_i c_σ = c(∂_i σ)` for `i ≥ 1`,
//!
//! where `ψφ(τ(σ))^{-1}` acts on level `q − 1`. The lift group is the kernel
//! of these conditions and `δ̄` acts blockwise by `δ^n(G/G_σ)_q`.

use num_bigint::BigInt;

use crate::abelian::{AbHom, FgAbGroup, IntMatrix, Lattice, NormalForm};
use crate::cohomology::{DegreeBasis, TwistedComplex};
use crate::equivariant::{GSimplicialSet, OrbitDecomposition, RepChoice};
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::simplicial::{SimplexId, SimplexRef};
use crate::twisting::Twist;

use super::theory::CartanTheory;

/// One orbit representative and its coefficient block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftBlock {
    pub rep: SimplexId,
    pub stabilizer: usize,
    pub offset: usize,
    pub width: usize,
}

/// Block layout of `⊕_σ A^n(G/G_σ)_{dim σ}` over every nondegenerate dimension.
#[derive(Debug, Clone)]
pub struct Layout {
    pub degree: usize,
    pub orbits: Vec<OrbitDecomposition>,
    /// `blocks[q][j]` for orbit `j` of dimension `q`.
    pub blocks: Vec<Vec<LiftBlock>>,
    pub ambient: FgAbGroup,
}

impl Layout {
    pub fn new(x: &GSimplicialSet, theory: &CartanTheory, n: usize, choice: RepChoice) -> Result<Self> {
        let top = x.complex().top_dimension().unwrap_or(0);
        if top > theory.p_max() {
            return Err(Error::InsufficientTruncation(format!(
                "X has simplices in dimension {top} but the theory stops at level {}",
                theory.p_max()
            )));
        }
        if n > theory.i_max() {
            return Err(Error::InsufficientTruncation(format!(
                "no A^{n} below i_max = {}",
                theory.i_max()
            )));
        }
        let a = theory.group(n);
        let mut orbits = Vec::with_capacity(top + 1);
        let mut blocks = Vec::with_capacity(top + 1);
        let mut parts = Vec::new();
        let mut offset = 0;
        for q in 0..=top {
            let o = x.orbit_decomposition_with(q, choice);
            let mut row = Vec::with_capacity(o.orbits.len());
            for orb in &o.orbits {
                let level = a.value(orb.stabilizer).level(q);
                row.push(LiftBlock {
                    rep: orb.rep,
                    stabilizer: orb.stabilizer,
                    offset,
                    width: level.n_gens(),
                });
                offset += level.n_gens();
                parts.push(level.clone());
            }
            orbits.push(o);
            blocks.push(row);
        }
        Ok(Self {
            degree: n,
            orbits,
            blocks,
            ambient: FgAbGroup::direct_sum(&parts),
        })
    }

    pub fn all_blocks(&self) -> impl Iterator<Item = (usize, &LiftBlock)> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(q, row)| row.iter().map(move |b| (q, b)))
    }

    pub fn width(&self) -> usize {
        self.ambient.n_gens()
    }

    /// `c ↦ c(y)` as a matrix `U → A^n(G/H)_{dim y}`, for a simplex `y` of `X` fixed by `H`.
    pub fn evaluation(&self, x: &GSimplicialSet, theory: &CartanTheory, h: usize, y: &SimplexRef) -> Result<IntMatrix> {
        let a = theory.group(self.degree);
        let z = y.base;
        let (j, g) = self.orbits[z.dim]
            .locate(z)
            .ok_or_else(|| Error::Internal(format!("`{}` lies in no orbit", x.complex().name(z))))?;
        let b = &self.blocks[z.dim][j];
        let f = x.orbit_category().morphism(h, b.stabilizer, g)?;
        let mut m = a.map(&f, z.dim).matrix().clone();
        let mut level = z.dim;
        for &k in y.word.indices().iter().rev() {
            m = a.value(h).degeneracy(level, k).matrix().mul(&m);
            level += 1;
        }
        let mut out = IntMatrix::zeros(m.rows(), self.width());
        out.set_block(0, b.offset, &m);
        Ok(out)
    }

    /// The coordinates of block `b` as a selection matrix `U → A^n(G/G_σ)_q`.
    pub fn projection(&self, b: &LiftBlock) -> IntMatrix {
        let mut p = IntMatrix::zeros(b.width, self.width());
        p.set_block(0, b.offset, &IntMatrix::identity(b.width));
        p
    }
}

/// One simpliciality condition `D c − E c ∈ relations` at a representative.
#[derive(Debug, Clone)]
pub struct Condition {
    pub rep: SimplexId,
    pub face: usize,
    pub target: FgAbGroup,
    pub matrix: IntMatrix,
}

/// The conditions at every representative of positive dimension.
/// `alpha(h, σ)` is `φ_H(τ(σ))`.
pub fn conditions(
    x: &GSimplicialSet,
    theory: &CartanTheory,
    layout: &Layout,
    alpha: &dyn Fn(usize, SimplexId) -> Result<AbHom>,
) -> Result<Vec<Condition>> {
    let a = theory.group(layout.degree);
    let mut out = Vec::new();
    for (q, b) in layout.all_blocks() {
        if q == 0 {
            continue;
        }
        let h = b.stabilizer;
        let sigma = SimplexRef::nondegenerate(b.rep);
        let proj = layout.projection(b);
        for i in 0..=q {
            let face = x.complex().face(i, &sigma)?;
            let mut e = layout.evaluation(x, theory, h, &face)?;
            if i == 0 {
                let inv = alpha(h, b.rep)?.inverse().ok_or_else(|| {
                    Error::Invalid(format!("twist at `{}` is not invertible", x.complex().name(b.rep)))
                })?;
                e = theory.psi(layout.degree, h, q - 1, &inv)?.matrix().mul(&e);
            }
            let d = a.value(h).face(q, i).matrix().mul(&proj);
            out.push(Condition {
                rep: b.rep,
                face: i,
                target: a.value(h).level(q - 1).clone(),
                matrix: d.sub(&e),
            });
        }
    }
    Ok(out)
}

/// Lift groups `L^0, …, L^top` inside their ambient groups and `δ̄` between them.
#[derive(Debug, Clone)]
pub struct LiftComplex {
    pub layouts: Vec<Layout>,
    /// `L^n` as a lattice in `ℤ^{gens of U^n}`; it contains the relations of `U^n`.
    pub lattices: Vec<Lattice>,
    /// `δ̄^n: U^n → U^{n+1}`, blockwise.
    pub differentials: Vec<AbHom>,
}

impl LiftComplex {
    pub fn new(twist: &dyn Twist, theory: &CartanTheory, top: usize, choice: RepChoice) -> Result<Self> {
        check_coefficients(twist, theory)?;
        let x = twist.space();
        let layouts: Vec<Layout> = (0..=top)
            .map(|n| Layout::new(x, theory, n, choice))
            .collect::<Result<_>>()?;
        let alpha = |h: usize, s: SimplexId| twist.action(h, s);
        let mut lattices = Vec::with_capacity(top + 1);
        for layout in &layouts {
            let conds = conditions(x, theory, layout, &alpha)?;
            lattices.push(solve(layout, &conds)?);
        }
        let mut differentials = Vec::with_capacity(top);
        for n in 0..top {
            let (s, t) = (&layouts[n], &layouts[n + 1]);
            let mut m = IntMatrix::zeros(t.width(), s.width());
            for (q, row) in s.blocks.iter().enumerate() {
                for (b, tb) in row.iter().zip(&t.blocks[q]) {
                    m.set_block(tb.offset, b.offset, theory.delta(n, b.stabilizer, q).matrix());
                }
            }
            let d = AbHom::new(s.ambient.clone(), t.ambient.clone(), m)?;
            if !lattices[n + 1].contains_columns(&d.matrix().mul(lattices[n].basis())) {
                return Err(Error::Internal(format!(
                    "delta-bar does not carry lifts of degree {n} to lifts"
                )));
            }
            differentials.push(d);
        }
        Ok(Self {
            layouts,
            lattices,
            differentials,
        })
    }

    pub fn top(&self) -> usize {
        self.layouts.len() - 1
    }

    /// `A_φ^n(X; τ)` with generators the basis of its lattice.
    pub fn lift_group(&self, n: usize) -> Result<FgAbGroup> {
        FgAbGroup::subquotient(&self.lattices[n], self.layouts[n].ambient.relation_lattice())
    }

    /// Lifts whose image under `δ̄^n` vanishes; every lift at the top degree.
    pub fn cocycle_lattice(&self, n: usize) -> Lattice {
        match self.differentials.get(n) {
            Some(d) => self.lattices[n].intersection(&d.kernel_lattice()),
            None => self.lattices[n].clone(),
        }
    }

    /// `δ̄^{n−1}(L^{n−1})` plus the relations of `U^n`.
    pub fn coboundary_lattice(&self, n: usize) -> Lattice {
        let rel = self.layouts[n].ambient.relation_lattice().clone();
        if n == 0 {
            return rel;
        }
        Lattice::span(&self.differentials[n - 1].matrix().mul(self.lattices[n - 1].basis())).sum(&rel)
    }

    /// `H^n(A_φ^*)`; in degree 0 this is the kernel of `δ̄^0`.
    pub fn cohomology(&self, n: usize) -> Result<FgAbGroup> {
        if n >= self.top() {
            return Err(Error::InsufficientTruncation(format!(
                "H^{n} needs lifts of degree {}",
                n + 1
            )));
        }
        FgAbGroup::subquotient(&self.cocycle_lattice(n), &self.coboundary_lattice(n))
    }

    pub fn check_square_zero(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("lift differential");
        for n in 1..self.differentials.len() {
            let dd = self.differentials[n].matrix().mul(self.differentials[n - 1].matrix());
            let ok = self.layouts[n + 1]
                .ambient
                .relation_lattice()
                .contains_columns(&dd.mul(self.lattices[n - 1].basis()));
            rep.check(ok, "delta-bar delta-bar = 0", || format!("degree {}", n - 1));
        }
        rep
    }

    /// `c ↦ (c_σ(ι_n))_σ` over the `n`-dimensional representatives: `U^n → C_G^n`.
    /// Only meaningful when `A^n(G/H)_n = M(G/H)`, as for the canonical theory.
    pub fn representability(&self, n: usize, basis: &DegreeBasis) -> Result<IntMatrix> {
        let layout = &self.layouts[n];
        let mut m = IntMatrix::zeros(basis.group.n_gens(), layout.width());
        for (j, o) in basis.orbits.orbits.iter().enumerate() {
            let row = layout
                .blocks
                .get(n)
                .ok_or_else(|| Error::Internal(format!("no {n}-simplices in the layout")))?;
            let b = row
                .iter()
                .find(|b| b.rep == o.rep)
                .ok_or_else(|| Error::Internal("orbit representatives disagree".into()))?;
            let w = basis.offsets[j + 1] - basis.offsets[j];
            if w != b.width {
                return Err(Error::Invalid(format!("A^{n}_{n} is not M at `{}`", o.rep.index)));
            }
            m.set_block(basis.offsets[j], b.offset, &IntMatrix::identity(w));
        }
        Ok(m)
    }
}

fn check_coefficients(twist: &dyn Twist, theory: &CartanTheory) -> Result<()> {
    let (m, t) = (twist.coefficients(), theory.coefficients());
    let orbit = m.orbit_category();
    if orbit.group() != t.orbit_category().group() {
        return Err(Error::Invalid("twist and theory over different groups".into()));
    }
    for h in orbit.objects() {
        if m.value(h) != t.value(h) {
            return Err(Error::Invalid(format!(
                "theory declares M({}) = {} but the twist uses {}",
                orbit.key(h),
                t.value(h),
                m.value(h)
            )));
        }
    }
    for f in orbit.morphisms() {
        if !m.map(&f).equals(t.map(&f)) {
            return Err(Error::Invalid(format!(
                "M({}) differs from the theory's",
                orbit.morphism_key(&f)
            )));
        }
    }
    Ok(())
}

fn solve(layout: &Layout, conds: &[Condition]) -> Result<Lattice> {
    let mut l = Lattice::full(layout.width());
    for c in conds {
        l = l.intersection(&Lattice::preimage(&c.matrix, c.target.relation_lattice()));
    }
    Ok(l)
}

/// `H^n` of the lift complex; `theory` must reach `A^{n+1}` and the top dimension of `X`.
pub fn theory_cohomology(twist: &dyn Twist, theory: &CartanTheory, n: usize) -> Result<FgAbGroup> {
    LiftComplex::new(twist, theory, n + 1, RepChoice::First)?.cohomology(n)
}

/// Both sides of the comparison in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckRow {
    pub degree: usize,
    pub bredon: NormalForm,
    pub lift: NormalForm,
}

impl CrosscheckRow {
    pub fn matches(&self) -> bool {
        self.bredon == self.lift
    }
}

#[derive(Debug, Clone)]
pub struct Crosscheck {
    pub rows: Vec<CrosscheckRow>,
    /// For the canonical theory: the representability map is an isomorphism
    /// `L^n ≅ C_G^n` and intertwines `δ̄` with `δ_τ`.
    pub cochain_map: ValidationReport,
}

impl Crosscheck {
    pub fn is_ok(&self) -> bool {
        self.rows.iter().all(CrosscheckRow::matches) && self.cochain_map.is_ok()
    }
}

/// The canonical theory just large enough for degrees `≤ n_max` over `X`.
pub fn canonical_for(twist: &dyn Twist, n_max: usize) -> Result<CartanTheory> {
    let top = twist.space().complex().top_dimension().unwrap_or(0);
    CartanTheory::canonical(twist.coefficients(), n_max + 1, top.max(1))
}

/// Compares `H_G^n(X; τ, φ)` with `H^n(A_φ^*)` of the canonical theory for `n ≤ n_max`
/// and checks the representability map at the cochain level.
pub fn crosscheck(twist: &dyn Twist, n_max: usize) -> Result<Crosscheck> {
    let theory = canonical_for(twist, n_max)?;
    let lifts = LiftComplex::new(twist, &theory, n_max + 1, RepChoice::First)?;
    let bredon = TwistedComplex::new(twist, n_max + 1, RepChoice::First)?;
    let cc = bredon.cochain_complex()?;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        rows.push(CrosscheckRow {
            degree: n,
            bredon: cc.cohomology_at(n)?.normal_form().clone(),
            lift: lifts.cohomology(n)?.normal_form().clone(),
        });
    }
    let mut rep = ValidationReport::new("representability");
    let phis: Vec<IntMatrix> = (0..=n_max + 1)
        .map(|n| lifts.representability(n, &bredon.bases[n]))
        .collect::<Result<_>>()?;
    for n in 0..=n_max + 1 {
        let basis = lifts.lattices[n].basis();
        let on_lifts = AbHom::new(lifts.lift_group(n)?, bredon.bases[n].group.clone(), phis[n].mul(basis))?;
        rep.check(on_lifts.is_iso(), "Phi is an isomorphism", || {
            format!(
                "degree {n}: kernel {}, cokernel {}",
                on_lifts.kernel(),
                on_lifts.cokernel()
            )
        });
        if n <= n_max {
            let lhs = bredon.differentials[n].matrix().mul(&phis[n]).mul(basis);
            let rhs = phis[n + 1].mul(lifts.differentials[n].matrix()).mul(basis);
            let ok = bredon.bases[n + 1]
                .group
                .relation_lattice()
                .contains_columns(&lhs.sub(&rhs));
            rep.check(ok, "Phi commutes with differentials", || format!("degree {n}"));
        }
    }
    Ok(Crosscheck { rows, cochain_map: rep })
}

/// Every element of a finite lattice quotient `l / rel`, as vectors of the ambient.
pub fn enumerate_quotient(l: &Lattice, rel: &Lattice, budget: usize) -> Result<Vec<Vec<BigInt>>> {
    let g = FgAbGroup::subquotient(l, rel)?;
    Ok(g.elements(budget)?.into_iter().map(|e| l.basis().mul_vec(&e)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn circle_z4_lift_group_is_z4() {
        let t = fixtures::CIRCLE_TWISTED_Z4.parsed().unwrap().twist().unwrap();
        let theory = canonical_for(t.as_ref(), 1).unwrap();
        let l = LiftComplex::new(t.as_ref(), &theory, 2, RepChoice::First).unwrap();
        assert_eq!(l.lift_group(1).unwrap().normal_form(), &NormalForm::new(0, &[4]));
        assert!(l.check_square_zero().is_ok());
    }

    #[test]
    fn crosscheck_on_bundled_scenarios() {
        for s in fixtures::CROSSCHECK {
            let t = s.parsed().unwrap().twist().unwrap();
            let c = crosscheck(t.as_ref(), 2).unwrap();
            assert!(c.is_ok(), "{}: {:?} {}", s.name, c.rows, c.cochain_map);
        }
    }
}
