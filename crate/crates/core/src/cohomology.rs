//! Bredon cochains in orbit coordinates and the twisted coboundary.
//!
//! A cochain of degree `n` is a value `m_j ∈ M(G/G_j)` per orbit of
//! nondegenerate `n`-simplices with representative `σ_j`. At `σ = g σ_j ∈ X^H`
//! it evaluates to `M(ĝ)(m_j)` for `ĝ: G/H → G/G_j, eH ↦ g G_j`; another
//! transporter `g n` with `n ∈ G_j` names the same coset, so the value does
//! not depend on the choice. Degenerate simplices evaluate to zero.

use crate::abelian::{AbHom, CochainComplex, CoefficientSystem, FgAbGroup, IntMatrix};
use crate::equivariant::{GSimplicialSet, OrbitDecomposition, RepChoice};
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::simplicial::SimplexRef;
use crate::twisting::Twist;

/// The cochain group of one degree and its block layout.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    pub dim: usize,
    pub orbits: OrbitDecomposition,
    /// Generator offset of each orbit block, plus the total at the end.
    pub offsets: Vec<usize>,
    pub group: FgAbGroup,
}

impl DegreeBasis {
    pub fn new(x: &GSimplicialSet, m: &CoefficientSystem, n: usize, choice: RepChoice) -> Self {
        let orbits = x.orbit_decomposition_with(n, choice);
        let blocks: Vec<FgAbGroup> = orbits.orbits.iter().map(|o| m.value(o.stabilizer).clone()).collect();
        let mut offsets = Vec::with_capacity(blocks.len() + 1);
        let mut acc = 0;
        for b in &blocks {
            offsets.push(acc);
            acc += b.n_gens();
        }
        offsets.push(acc);
        Self {
            dim: n,
            orbits,
            offsets,
            group: FgAbGroup::direct_sum(&blocks),
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.orbits.orbits.len()
    }

    /// `f ↦ f(G/H)(σ)` as a matrix `C^n → M(G/H)`, for an `n`-simplex `σ` of `X` fixed by `H`.
    pub fn evaluation(
        &self,
        x: &GSimplicialSet,
        m: &CoefficientSystem,
        h: usize,
        sigma: &SimplexRef,
    ) -> Result<IntMatrix> {
        let rows = m.value(h).n_gens();
        let mut out = IntMatrix::zeros(rows, self.group.n_gens());
        if sigma.is_degenerate() {
            return Ok(out);
        }
        let (j, g) = self
            .orbits
            .locate(sigma.base)
            .ok_or_else(|| Error::Internal(format!("`{}` lies in no orbit", x.complex().name(sigma.base))))?;
        let f = x.orbit_category().morphism(h, self.orbits.orbits[j].stabilizer, g)?;
        out.set_block(0, self.offsets[j], m.map(&f).matrix());
        Ok(out)
    }
}

/// `δ_τ^n: C^n → C^{n+1}`, assembled at each `(n+1)`-orbit representative `x`
/// with `H = G_x`:
/// `δf(x) = φ_H(τ(x))^{-1} f(∂_0 x) + Σ_{i≥1} (−1)^i f(∂_i x)`.
pub fn twisted_coboundary(twist: &dyn Twist, source: &DegreeBasis, target: &DegreeBasis) -> Result<AbHom> {
    let x = twist.space();
    let m = twist.coefficients();
    let c = x.complex();
    let n = source.dim;
    let mut d = IntMatrix::zeros(target.group.n_gens(), source.group.n_gens());
    for (j, o) in target.orbits.orbits.iter().enumerate() {
        let h = o.stabilizer;
        let rep = SimplexRef::nondegenerate(o.rep);
        let mut block = IntMatrix::zeros(m.value(h).n_gens(), source.group.n_gens());
        for i in 0..=n + 1 {
            let face = c.face(i, &rep)?;
            let mut e = source.evaluation(x, m, h, &face)?;
            if i == 0 {
                let a = twist.action(h, o.rep)?;
                let inv = a
                    .inverse()
                    .ok_or_else(|| Error::Invalid(format!("twist at `{}` is not invertible", c.name(o.rep))))?;
                e = inv.matrix().mul(&e);
            } else if i % 2 == 1 {
                e = e.neg();
            }
            block = block.add(&e);
        }
        d.set_block(target.offsets[j], 0, &block);
    }
    AbHom::new(source.group.clone(), target.group.clone(), d)
}

/// `C_G^0 → … → C_G^top` with the twisted coboundary.
#[derive(Debug, Clone)]
pub struct TwistedComplex {
    pub bases: Vec<DegreeBasis>,
    pub differentials: Vec<AbHom>,
}

impl TwistedComplex {
    pub fn new(twist: &dyn Twist, top: usize, choice: RepChoice) -> Result<Self> {
        let x = twist.space();
        if top > x.complex().truncation() {
            return Err(Error::InsufficientTruncation(format!(
                "degree {top} exceeds the truncation {}",
                x.complex().truncation()
            )));
        }
        let bases: Vec<DegreeBasis> = (0..=top)
            .map(|n| DegreeBasis::new(x, twist.coefficients(), n, choice))
            .collect();
        let differentials = (0..top)
            .map(|n| twisted_coboundary(twist, &bases[n], &bases[n + 1]))
            .collect::<Result<_>>()?;
        Ok(Self { bases, differentials })
    }

    /// `δ^{n+1} δ^n = 0` modulo relations, in every degree.
    pub fn check_square_zero(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("twisted coboundary");
        for n in 1..self.differentials.len() {
            let ok = matches!(self.differentials[n].after(&self.differentials[n - 1]), Ok(dd) if dd.is_zero());
            rep.check(ok, "d d = 0", || format!("degree {}", n - 1));
        }
        rep
    }

    pub fn cochain_complex(&self) -> Result<CochainComplex> {
        CochainComplex::new(
            self.bases.iter().map(|b| b.group.clone()).collect(),
            self.differentials.clone(),
        )
    }
}

/// `H_G^n(X; τ, φ)`; needs the complex through degree `n + 1`.
pub fn equivariant_cohomology(twist: &dyn Twist, n: usize) -> Result<FgAbGroup> {
    equivariant_cohomology_with(twist, n, RepChoice::First)
}

pub fn equivariant_cohomology_with(twist: &dyn Twist, n: usize, choice: RepChoice) -> Result<FgAbGroup> {
    let d = twist.space().complex().truncation();
    if d < n + 1 {
        return Err(Error::InsufficientTruncation(format!(
            "H^{n} needs simplices through dimension {}, truncation is {d}",
            n + 1
        )));
    }
    TwistedComplex::new(twist, n + 1, choice)?
        .cochain_complex()?
        .cohomology_at(n)
}
