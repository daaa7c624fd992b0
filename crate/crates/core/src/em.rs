//! Cochain models `C(A,n)_q = C^n(Δ[q]; A)` (normalized), their cocycle
//! kernels `K(A,n)`, representability of cochains by maps, the postcomposition
//! action, and generalized O_G-Eilenberg–MacLane complexes.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abelian::{AbHom, FgAbGroup, IntMatrix, PiModule, SimplicialAbGroup};
use crate::error::{Error, Result};
use crate::orbit::OrbitMorphism;
use crate::report::ValidationReport;
use crate::simplicial::word::combinations;
use crate::simplicial::{
    validate_levelwise, FiniteLevels, FiniteSimplicialSet, SimplexRef, SimplicialMap, SimplicialObject,
};
use crate::twisting::{TwistedProduct, WBar};

/// Nondegenerate `n`-simplices of `Δ[q]`: the `(n+1)`-subsets of `[q]`, lexicographic.
pub fn subsets(q: usize, n: usize) -> Vec<Vec<usize>> {
    combinations(q + 1, n + 1)
}

fn position(list: &[Vec<usize>]) -> BTreeMap<&[usize], usize> {
    list.iter().enumerate().map(|(k, s)| (s.as_slice(), k)).collect()
}

/// `∂_i: C^n(Δ[q]) → C^n(Δ[q−1])`, `(∂_i μ)(S) = μ(δ_i S)`.
pub fn face_matrix(q: usize, n: usize, i: usize) -> IntMatrix {
    let src = subsets(q, n);
    let tgt = subsets(q - 1, n);
    let pos = position(&src);
    let mut m = IntMatrix::zeros(tgt.len(), src.len());
    for (r, s) in tgt.iter().enumerate() {
        let image: Vec<usize> = s.iter().map(|&k| if k < i { k } else { k + 1 }).collect();
        m[(r, pos[image.as_slice()])] = BigInt::from(1);
    }
    m
}

/// `s_j: C^n(Δ[q]) → C^n(Δ[q+1])`, `(s_j μ)(T) = μ(σ_j T)`, zero when `σ_j T` is degenerate.
pub fn degeneracy_matrix(q: usize, n: usize, j: usize) -> IntMatrix {
    let src = subsets(q, n);
    let tgt = subsets(q + 1, n);
    let pos = position(&src);
    let mut m = IntMatrix::zeros(tgt.len(), src.len());
    for (r, t) in tgt.iter().enumerate() {
        if t.contains(&j) && t.contains(&(j + 1)) {
            continue;
        }
        let image: Vec<usize> = t.iter().map(|&k| if k <= j { k } else { k - 1 }).collect();
        m[(r, pos[image.as_slice()])] = BigInt::from(1);
    }
    m
}

/// `δ^n: C^n(Δ[q]) → C^{n+1}(Δ[q])`, `(δμ)(S) = Σ_i (−1)^i μ(S ∖ s_i)`.
pub fn coboundary_matrix(q: usize, n: usize) -> IntMatrix {
    let src = subsets(q, n);
    let tgt = subsets(q, n + 1);
    let pos = position(&src);
    let mut m = IntMatrix::zeros(tgt.len(), src.len());
    for (r, s) in tgt.iter().enumerate() {
        for i in 0..s.len() {
            let mut t = s.clone();
            t.remove(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m[(r, pos[t.as_slice()])] += sign;
        }
    }
    m
}

fn lift(p: &IntMatrix, a: &FgAbGroup) -> IntMatrix {
    p.kron(&IntMatrix::identity(a.n_gens()))
}

/// `C(A,n)` through level `top`, generators ordered subset-major.
pub fn canonical_c(a: &FgAbGroup, n: usize, top: usize) -> SimplicialAbGroup {
    let levels: Vec<FgAbGroup> = (0..=top).map(|q| a.power(subsets(q, n).len())).collect();
    let hom = |m: IntMatrix, s: usize, t: usize| {
        AbHom::new(levels[s].clone(), levels[t].clone(), lift(&m, a)).expect("structure maps are well defined")
    };
    let faces = (0..=top)
        .map(|q| {
            if q == 0 {
                Vec::new()
            } else {
                (0..=q).map(|i| hom(face_matrix(q, n, i), q, q - 1)).collect()
            }
        })
        .collect();
    let degens = (0..=top)
        .map(|q| {
            if q < top {
                (0..=q).map(|j| hom(degeneracy_matrix(q, n, j), q, q + 1)).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    SimplicialAbGroup::new(levels, faces, degens).expect("shapes match")
}

/// `δ^n: C(A,n)_q → C(A,n+1)_q` for `q ≤ top`.
pub fn canonical_delta(a: &FgAbGroup, n: usize, top: usize) -> Vec<AbHom> {
    (0..=top)
        .map(|q| {
            AbHom::new(
                a.power(subsets(q, n).len()),
                a.power(subsets(q, n + 1).len()),
                lift(&coboundary_matrix(q, n), a),
            )
            .expect("coboundary is well defined")
        })
        .collect()
}

/// `K(A,n) = ker δ^n` with its inclusion matrices into `C(A,n)`.
pub fn canonical_k(a: &FgAbGroup, n: usize, top: usize) -> Result<(SimplicialAbGroup, Vec<IntMatrix>)> {
    canonical_c(a, n, top).kernel(&canonical_delta(a, n, top))
}

/// A simplex of `C(A,n)` or `K(A,n)`: its level and reduced coordinates in `A^{#subsets}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cochain {
    pub q: usize,
    pub coords: Vec<BigInt>,
}

/// `C(A,n)` or `K(A,n)` as an enumerable simplicial set, for finite `A`.
#[derive(Debug, Clone)]
pub struct CochainModel {
    a: FgAbGroup,
    n: usize,
    cocycles: bool,
    budget: usize,
}

impl CochainModel {
    pub fn c(a: FgAbGroup, n: usize) -> Self {
        Self {
            a,
            n,
            cocycles: false,
            budget: 1 << 16,
        }
    }

    pub fn k(a: FgAbGroup, n: usize) -> Self {
        Self {
            a,
            n,
            cocycles: true,
            budget: 1 << 16,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn coefficients(&self) -> &FgAbGroup {
        &self.a
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn level_group(&self, q: usize) -> FgAbGroup {
        self.a.power(subsets(q, self.n).len())
    }

    pub fn make(&self, q: usize, coords: &[BigInt]) -> Cochain {
        Cochain {
            q,
            coords: self.level_group(q).reduce(coords),
        }
    }

    pub fn zero(&self, q: usize) -> Cochain {
        self.make(q, &self.level_group(q).zero())
    }

    fn apply(&self, m: &IntMatrix, q: usize, x: &Cochain) -> Cochain {
        self.make(q, &lift(m, &self.a).mul_vec(&x.coords))
    }

    /// Postcomposition with an endomorphism `α` of `A`.
    pub fn postcompose(&self, alpha: &IntMatrix, x: &Cochain) -> Cochain {
        let n = subsets(x.q, self.n).len();
        self.make(x.q, &IntMatrix::identity(n).kron(alpha).mul_vec(&x.coords))
    }

    /// `δ^n` into `C(A, n+1)`.
    pub fn coboundary(&self, x: &Cochain) -> Cochain {
        let next = CochainModel::c(self.a.clone(), self.n + 1);
        next.apply(&coboundary_matrix(x.q, self.n), x.q, x)
    }

    pub fn is_cocycle(&self, x: &Cochain) -> bool {
        let next = self.a.power(subsets(x.q, self.n + 1).len());
        next.is_zero(&lift(&coboundary_matrix(x.q, self.n), &self.a).mul_vec(&x.coords))
    }
}

impl SimplicialObject for CochainModel {
    type Simplex = Cochain;

    fn dim(&self, x: &Cochain) -> usize {
        x.q
    }

    fn face(&self, i: usize, x: &Cochain) -> Cochain {
        self.apply(&face_matrix(x.q, self.n, i), x.q - 1, x)
    }

    fn degeneracy(&self, j: usize, x: &Cochain) -> Cochain {
        self.apply(&degeneracy_matrix(x.q, self.n, j), x.q + 1, x)
    }

    fn label(&self, x: &Cochain) -> String {
        let parts: Vec<String> = x.coords.iter().map(ToString::to_string).collect();
        format!("{}:[{}]", x.q, parts.join(","))
    }
}

impl FiniteLevels for CochainModel {
    fn simplices(&self, q: usize) -> Result<Vec<Cochain>> {
        let level = self.level_group(q);
        if !self.cocycles {
            return Ok(level
                .elements(self.budget)?
                .into_iter()
                .map(|c| Cochain { q, coords: c })
                .collect());
        }
        let delta = AbHom::new(
            level.clone(),
            self.a.power(subsets(q, self.n + 1).len()),
            lift(&coboundary_matrix(q, self.n), &self.a),
        )?;
        let kernel_lattice = delta.kernel_lattice();
        let kernel = FgAbGroup::subquotient(&kernel_lattice, level.relation_lattice())?;
        let mut out: Vec<Cochain> = kernel
            .elements(self.budget)?
            .into_iter()
            .map(|e| self.make(q, &kernel_lattice.basis().mul_vec(&e)))
            .collect();
        out.sort();
        Ok(out)
    }
}

/// The `n`-face of `z` spanned by the vertices in `s` (increasing).
fn face_on(y: &FiniteSimplicialSet, z: &SimplexRef, s: &[usize]) -> SimplexRef {
    let mut out = z.clone();
    for i in (0..=z.dim()).rev() {
        if !s.contains(&i) {
            out = y.face(i, &out).expect("in range");
        }
    }
    out
}

/// Normalized `n`-cochains on `Y` with values in `A`: `A^{#Y_n}`.
pub fn cochain_group(y: &FiniteSimplicialSet, a: &FgAbGroup, n: usize) -> FgAbGroup {
    a.power(y.num_nondegenerate(n))
}

/// The cochain `y ↦ f(y)` on nondegenerate `n`-simplices.
pub fn cochain_of_map(y: &FiniteSimplicialSet, a: &FgAbGroup, n: usize, f: &SimplicialMap<Cochain>) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(y.num_nondegenerate(n) * a.n_gens());
    for id in y.nondegenerate(n) {
        out.extend(f.value(id).coords.iter().cloned());
    }
    cochain_group(y, a, n).reduce(&out)
}

/// The map sending a `q`-simplex `z` to `S ↦ c(z|_S)`, zero on degenerate faces.
pub fn map_of_cochain(y: &FiniteSimplicialSet, a: &FgAbGroup, n: usize, c: &[BigInt]) -> SimplicialMap<Cochain> {
    let model = CochainModel::c(a.clone(), n);
    let g = a.n_gens();
    SimplicialMap::from_fn(y, |id| {
        let z = SimplexRef::nondegenerate(id);
        let mut coords = Vec::new();
        for s in subsets(id.dim, n) {
            let face = face_on(y, &z, &s);
            if face.is_degenerate() {
                coords.extend(std::iter::repeat_n(BigInt::zero(), g));
            } else {
                let k = face.base.index;
                coords.extend(c[k * g..(k + 1) * g].iter().cloned());
            }
        }
        model.make(id.dim, &coords)
    })
}

/// Simplicial coboundary on normalized cochains of `Y`: `(δc)(z) = Σ (−1)^i c(∂_i z)`.
pub fn simplicial_coboundary(y: &FiniteSimplicialSet, a: &FgAbGroup, n: usize) -> AbHom {
    let rows = y.num_nondegenerate(n + 1);
    let cols = y.num_nondegenerate(n);
    let mut m = IntMatrix::zeros(rows, cols);
    for z in y.nondegenerate(n + 1) {
        let zr = SimplexRef::nondegenerate(z);
        for i in 0..=n + 1 {
            let f = y.face(i, &zr).expect("in range");
            if !f.is_degenerate() {
                m[(z.index, f.base.index)] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    AbHom::new(cochain_group(y, a, n), cochain_group(y, a, n + 1), lift(&m, a)).expect("well defined")
}

/// `ψ(α) = α ∘ −` on `C(A,n)_q`.
pub fn psi_matrix(a: &FgAbGroup, n: usize, q: usize, alpha: &IntMatrix) -> AbHom {
    let g = a.power(subsets(q, n).len());
    AbHom::new(g.clone(), g, IntMatrix::identity(subsets(q, n).len()).kron(alpha))
        .expect("postcomposition is well defined")
}

/// `L_φ(M,n)`: per orbit type, `K(M(G/H),n) ×_{τ(π)} W̄π(G/H)` with `π` acting through `ψ φ`.
pub struct GeneralizedEM {
    phi: PiModule,
    n: usize,
    values: Vec<TwistedProduct<CochainModel, WBar>>,
}

impl std::fmt::Debug for GeneralizedEM {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GeneralizedEM(n = {})", self.n)
    }
}

impl GeneralizedEM {
    pub fn new(phi: &PiModule, n: usize, q_max: usize, budget: usize) -> Result<Self> {
        let orbit = phi.pi().orbit_category().clone();
        let mut values = Vec::with_capacity(orbit.num_objects());
        for h in orbit.objects() {
            let m = phi.module().value(h).clone();
            if !m.is_finite() {
                return Err(Error::Invalid(format!("M({}) is infinite", orbit.key(h))));
            }
            let group = phi.pi().value(h).clone();
            let fiber = CochainModel::k(m, n).with_budget(budget);
            let base = WBar::new(group.clone()).with_budget(budget);
            let acting = fiber.clone();
            let mats: Vec<IntMatrix> = group.elements().map(|u| phi.phi(h, u).matrix().clone()).collect();
            let tau_base = base.clone();
            values.push(TwistedProduct::new(
                fiber,
                base,
                group,
                move |u, c: &Cochain| acting.postcompose(&mats[u], c),
                move |x: &Vec<usize>| tau_base.tau(x),
                q_max,
            )?);
        }
        Ok(Self {
            phi: phi.clone(),
            n,
            values,
        })
    }

    pub fn at(&self, h: usize) -> &TwistedProduct<CochainModel, WBar> {
        &self.values[h]
    }

    /// `(c, x) ↦ (M(ĝ) ∘ c, π(ĝ) x)`.
    pub fn structure_map(&self, f: &OrbitMorphism, s: &(Cochain, Vec<usize>)) -> (Cochain, Vec<usize>) {
        let m = self.phi.module().map(f).matrix();
        let fiber = self.values[f.source].fiber();
        let c = fiber.postcompose(m, &s.0);
        let x = s.1.iter().map(|&u| self.phi.pi().map(f, u)).collect();
        (c, x)
    }

    /// Simplicial identities of every value, and that every structure map and
    /// the projection commute with faces and degeneracies.
    pub fn validate(&self, q_max: usize) -> Result<ValidationReport> {
        let orbit: Arc<_> = self.phi.pi().orbit_category().clone();
        let mut rep = ValidationReport::new("generalized Eilenberg-MacLane complex");
        for h in orbit.objects() {
            rep.merge(validate_levelwise(&self.values[h], q_max, &orbit.key(h))?);
        }
        for f in orbit.morphisms() {
            let (src, tgt) = (&self.values[f.target], &self.values[f.source]);
            for q in 0..=q_max {
                for s in src.simplices(q)? {
                    let fs = self.structure_map(&f, &s);
                    for i in 0..=q {
                        if q >= 1 {
                            let ok = tgt.face(i, &fs) == self.structure_map(&f, &src.face(i, &s));
                            rep.check(ok, "structure map commutes with faces", || {
                                format!("{} at {}", orbit.morphism_key(&f), src.label(&s))
                            });
                            let ok = tgt.base().face(i, &fs.1)
                                == src
                                    .base()
                                    .face(i, &s.1)
                                    .iter()
                                    .map(|&u| self.phi.pi().map(&f, u))
                                    .collect::<Vec<_>>();
                            rep.check(ok, "projection is simplicial", || src.label(&s));
                        }
                        if q < q_max {
                            let ok = tgt.degeneracy(i, &fs) == self.structure_map(&f, &src.degeneracy(i, &s));
                            rep.check(ok, "structure map commutes with degeneracies", || {
                                format!("{} at {}", orbit.morphism_key(&f), src.label(&s))
                            });
                        }
                    }
                }
            }
        }
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::group::NormalForm;

    #[test]
    fn level_sizes() {
        let z2 = FgAbGroup::cyclic(2);
        assert_eq!(CochainModel::c(z2.clone(), 1).simplices(2).unwrap().len(), 8);
        let k = CochainModel::k(z2, 1);
        for q in 0..5 {
            assert_eq!(k.simplices(q).unwrap().len(), 1 << q);
        }
    }

    #[test]
    fn models_are_simplicial() {
        let z4 = FgAbGroup::cyclic(4);
        assert!(validate_levelwise(&CochainModel::k(z4.clone(), 1), 3, "K")
            .unwrap()
            .is_ok());
        assert!(canonical_c(&z4, 2, 4).validate("C").is_ok());
    }

    #[test]
    fn k_z4_1_homotopy() {
        let (k, _) = canonical_k(&FgAbGroup::cyclic(4), 1, 3).unwrap();
        assert!(k.moore_homotopy(0).unwrap().is_trivial());
        assert_eq!(k.moore_homotopy(1).unwrap().normal_form(), &NormalForm::new(0, &[4]));
        assert!(k.moore_homotopy(2).unwrap().is_trivial());
    }
}
