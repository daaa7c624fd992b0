//! Cartan theories truncated at `(i_max, p_max)`: simplicial abelian O_G-groups
//! `A^0, …, A^{i_max}` with differentials, the declared `M` with its inclusion
//! `ι: M → A^0_0`, and the action `ψ` of `Aut(M(G/H))` on each `A^i(G/H)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::abelian::{AbHom, CoefficientSystem, FgAbGroup, IntMatrix, OGSimplicialAbGroup, SimplicialAbGroup};
use crate::em::{canonical_c, canonical_delta};
use crate::error::{Error, Result};
use crate::orbit::OrbitCategory;
use crate::report::ValidationReport;

/// Replaces `ψ^i_H(α)` by `levels` (one automorphism of `A^i(G/H)_p` per level).
#[derive(Debug, Clone)]
pub struct PsiOverride {
    pub degree: usize,
    pub object: usize,
    pub alpha: AbHom,
    pub levels: Vec<AbHom>,
}

#[derive(Debug, Clone)]
pub struct CartanTheory {
    orbit: Arc<OrbitCategory>,
    p_max: usize,
    groups: Vec<OGSimplicialAbGroup>,
    /// `delta[i][h][p]: A^i(G/H)_p → A^{i+1}(G/H)_p`.
    delta: Vec<Vec<Vec<AbHom>>>,
    m: CoefficientSystem,
    iota: Vec<AbHom>,
    overrides: Vec<PsiOverride>,
}

impl CartanTheory {
    /// Shapes are checked here; every mathematical condition is left to [`check_axioms`].
    pub fn new(
        m: CoefficientSystem,
        groups: Vec<OGSimplicialAbGroup>,
        delta: Vec<Vec<Vec<AbHom>>>,
        iota: Vec<AbHom>,
    ) -> Result<Self> {
        let orbit = m.orbit_category().clone();
        let p_max = groups
            .first()
            .ok_or_else(|| Error::DimensionMismatch("a theory needs A^0".into()))?
            .top();
        if groups.iter().any(|a| a.top() != p_max) {
            return Err(Error::DimensionMismatch("A^i truncated at different levels".into()));
        }
        if delta.len() + 1 != groups.len() {
            return Err(Error::DimensionMismatch(
                "one differential between consecutive A^i".into(),
            ));
        }
        for (i, d) in delta.iter().enumerate() {
            for h in orbit.objects() {
                let ok = d.len() == orbit.num_objects()
                    && d[h].len() == p_max + 1
                    && d[h].iter().enumerate().all(|(p, a)| {
                        a.source() == groups[i].value(h).level(p) && a.target() == groups[i + 1].value(h).level(p)
                    });
                if !ok {
                    return Err(Error::DimensionMismatch(format!(
                        "delta^{i} at {} has the wrong shape",
                        orbit.key(h)
                    )));
                }
            }
        }
        let iota_ok = iota.len() == orbit.num_objects()
            && orbit
                .objects()
                .all(|h| iota[h].source() == m.value(h) && iota[h].target() == groups[0].value(h).level(0));
        if !iota_ok {
            return Err(Error::DimensionMismatch("iota must run M(G/H) -> A^0(G/H)_0".into()));
        }
        Ok(Self {
            orbit,
            p_max,
            groups,
            delta,
            m,
            iota,
            overrides: Vec::new(),
        })
    }

    /// `A^i(G/H) = C(M(G/H), i)` with the cochain coboundary, `ι = id` and `ψ` by postcomposition.
    pub fn canonical(m: &CoefficientSystem, i_max: usize, p_max: usize) -> Result<Self> {
        let orbit = m.orbit_category().clone();
        let mut groups = Vec::with_capacity(i_max + 1);
        for i in 0..=i_max {
            let values: Vec<SimplicialAbGroup> = orbit.objects().map(|h| canonical_c(m.value(h), i, p_max)).collect();
            let mut maps = BTreeMap::new();
            for f in orbit.morphisms() {
                let levels = (0..=p_max)
                    .map(|p| {
                        let (src, tgt) = (values[f.target].level(p), values[f.source].level(p));
                        AbHom::new(
                            src.clone(),
                            tgt.clone(),
                            blockwise(src, m.value(f.target), m.map(&f).matrix()),
                        )
                    })
                    .collect::<Result<Vec<_>>>()?;
                maps.insert(f, levels);
            }
            groups.push(OGSimplicialAbGroup::new(orbit.clone(), values, maps)?);
        }
        let delta = (0..i_max)
            .map(|i| orbit.objects().map(|h| canonical_delta(m.value(h), i, p_max)).collect())
            .collect();
        let iota = orbit.objects().map(|h| AbHom::identity(m.value(h))).collect();
        Self::new(m.clone(), groups, delta, iota)
    }

    /// Every `A^i = 0` while still declaring `M`.
    pub fn zero(m: &CoefficientSystem, i_max: usize, p_max: usize) -> Result<Self> {
        let orbit = m.orbit_category().clone();
        let zero = FgAbGroup::trivial();
        let z = SimplicialAbGroup::constant(&zero, p_max);
        let groups: Vec<OGSimplicialAbGroup> = (0..=i_max)
            .map(|_| {
                let values = vec![z.clone(); orbit.num_objects()];
                let maps = orbit
                    .morphisms()
                    .into_iter()
                    .map(|f| (f, vec![AbHom::identity(&zero); p_max + 1]))
                    .collect();
                OGSimplicialAbGroup::new(orbit.clone(), values, maps)
            })
            .collect::<Result<_>>()?;
        let delta = (0..i_max)
            .map(|_| {
                orbit
                    .objects()
                    .map(|_| vec![AbHom::identity(&zero); p_max + 1])
                    .collect()
            })
            .collect();
        let iota = orbit.objects().map(|h| AbHom::zero(m.value(h), &zero)).collect();
        Self::new(m.clone(), groups, delta, iota)
    }

    /// The same theory with `δ^i` replaced by zero.
    pub fn with_zero_differential(mut self, i: usize) -> Result<Self> {
        let d = self
            .delta
            .get_mut(i)
            .ok_or_else(|| Error::IndexOutOfRange(format!("no differential delta^{i}")))?;
        for per_h in d.iter_mut() {
            for a in per_h.iter_mut() {
                *a = AbHom::zero(a.source(), a.target());
            }
        }
        Ok(self)
    }

    /// The same theory with `ψ^i_H(α) = id` for every `H` and every `α`.
    pub fn with_trivial_psi(mut self, i: usize, budget: usize) -> Result<Self> {
        if i > self.i_max() {
            return Err(Error::IndexOutOfRange(format!("no A^{i}")));
        }
        for h in self.orbit.objects() {
            for alpha in automorphisms(self.m.value(h), budget)? {
                let levels = (0..=self.p_max)
                    .map(|p| AbHom::identity(self.groups[i].value(h).level(p)))
                    .collect();
                self.overrides.push(PsiOverride {
                    degree: i,
                    object: h,
                    alpha,
                    levels,
                });
            }
        }
        Ok(self)
    }

    pub fn with_override(mut self, o: PsiOverride) -> Self {
        self.overrides.push(o);
        self
    }

    pub fn orbit_category(&self) -> &Arc<OrbitCategory> {
        &self.orbit
    }

    pub fn i_max(&self) -> usize {
        self.groups.len() - 1
    }

    pub fn p_max(&self) -> usize {
        self.p_max
    }

    pub fn group(&self, i: usize) -> &OGSimplicialAbGroup {
        &self.groups[i]
    }

    pub fn delta(&self, i: usize, h: usize, p: usize) -> &AbHom {
        &self.delta[i][h][p]
    }

    /// The declared `M`, meant to be `(Z^0 A)_0`.
    pub fn coefficients(&self) -> &CoefficientSystem {
        &self.m
    }

    pub fn iota(&self, h: usize) -> &AbHom {
        &self.iota[h]
    }

    /// `Z^i = ker δ^i` as a simplicial abelian O_G-group, with generators the
    /// kernel lattice bases; needs `i < i_max`.
    pub fn cocycles(&self, i: usize) -> Result<OGSimplicialAbGroup> {
        if i >= self.i_max() {
            return Err(Error::InsufficientTruncation(format!("Z^{i} needs delta^{i}")));
        }
        let mut values = Vec::with_capacity(self.orbit.num_objects());
        let mut bases = Vec::with_capacity(self.orbit.num_objects());
        for h in self.orbit.objects() {
            let (z, incl) = self.groups[i].value(h).kernel(&self.delta[i][h])?;
            values.push(z);
            bases.push(incl);
        }
        let mut maps = BTreeMap::new();
        for f in self.orbit.morphisms() {
            let levels = (0..=self.p_max)
                .map(|p| {
                    let image = self.groups[i].map(&f, p).matrix().mul(&bases[f.target][p]);
                    let within = self.delta[i][f.source][p].kernel_lattice();
                    let cols = (0..image.cols())
                        .map(|c| {
                            within.coordinates(&image.column(c)).ok_or_else(|| {
                                Error::Invalid(format!(
                                    "A^{i}({}) does not preserve cocycles",
                                    self.orbit.morphism_key(&f)
                                ))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    AbHom::new(
                        values[f.target].level(p).clone(),
                        values[f.source].level(p).clone(),
                        IntMatrix::from_columns(bases[f.source][p].cols(), &cols),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            maps.insert(f, levels);
        }
        OGSimplicialAbGroup::new(self.orbit.clone(), values, maps)
    }

    /// `ψ^i_H(α)` at level `p`: an override when one matches `α`, otherwise
    /// postcomposition with `α` on each `M(G/H)`-block of `A^i(G/H)_p`.
    pub fn psi(&self, i: usize, h: usize, p: usize, alpha: &AbHom) -> Result<AbHom> {
        if let Some(o) = self
            .overrides
            .iter()
            .find(|o| o.degree == i && o.object == h && o.alpha.equals(alpha))
        {
            return Ok(o.levels[p].clone());
        }
        let level = self.groups[i].value(h).level(p);
        AbHom::new(
            level.clone(),
            level.clone(),
            blockwise(level, self.m.value(h), alpha.matrix()),
        )
    }
}

/// `I_N ⊗ a` where `level` has `N` blocks of `block.n_gens()` generators.
fn blockwise(level: &FgAbGroup, block: &FgAbGroup, a: &IntMatrix) -> IntMatrix {
    let g = block.n_gens();
    if g == 0 {
        return IntMatrix::zeros(0, level.n_gens());
    }
    IntMatrix::identity(level.n_gens() / g).kron(a)
}

/// `Aut(A)`: every automorphism when `A` is finite and the search fits in
/// `budget` candidates, `{id, −id}` when `A` is infinite.
pub fn automorphisms(a: &FgAbGroup, budget: usize) -> Result<Vec<AbHom>> {
    let id = AbHom::identity(a);
    if !a.is_finite() {
        let neg = AbHom::new(a.clone(), a.clone(), IntMatrix::scalar(a.n_gens(), -1))?;
        return Ok(if neg.equals(&id) { vec![id] } else { vec![id, neg] });
    }
    let elems = a.elements(budget)?;
    let k = a.n_gens();
    let total = (elems.len() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::Budget(format!(
            "{total} candidate endomorphisms of {a} exceed {budget}"
        )));
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; k];
    loop {
        let cols: Vec<Vec<BigInt>> = digits.iter().map(|&d| elems[d].clone()).collect();
        if let Ok(f) = AbHom::new(a.clone(), a.clone(), IntMatrix::from_columns(k, &cols)) {
            if f.is_iso() {
                out.push(f);
            }
        }
        let mut j = 0;
        loop {
            if j == k {
                return Ok(out);
            }
            digits[j] += 1;
            if digits[j] == elems.len() {
                digits[j] = 0;
                j += 1;
            } else {
                break;
            }
        }
    }
}

/// One report per axiom, numbered 1 to 5.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub i_max: usize,
    pub p_max: usize,
    pub axioms: Vec<ValidationReport>,
}

impl AxiomReport {
    pub fn passed(&self) -> Vec<bool> {
        self.axioms.iter().map(ValidationReport::is_ok).collect()
    }

    pub fn is_ok(&self) -> bool {
        self.axioms.iter().all(ValidationReport::is_ok)
    }

    /// Axiom numbers that fail.
    pub fn failing(&self) -> Vec<usize> {
        (1..=5).filter(|&k| !self.axioms[k - 1].is_ok()).collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bounds i <= {}, p <= {}", self.i_max, self.p_max)?;
        for r in &self.axioms {
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

fn same(a: Result<AbHom>, b: Result<AbHom>) -> bool {
    matches!((a, b), (Ok(a), Ok(b)) if a.equals(&b))
}

/// The five axioms within the theory's bounds.
///
/// 1. each `A^i` is a simplicial abelian O_G-group, `δ` is simplicial and natural, `δδ = 0`;
///    the product is not modelled;
/// 2. `ker δ^i = im δ^{i−1}` for `1 ≤ i < i_max` at every `(H, p)`;
/// 3. `π_n A^i(G/H) = 0` for `n < p_max`;
/// 4. faces and degeneracies of `Z^0 = ker δ^0` are isomorphisms, and `ι` maps `M`
///    isomorphically and naturally onto `(Z^0)_0`;
/// 5. each `ψ^i_H` is a homomorphism into simplicial automorphisms, commutes with
///    `δ`, and `ψ_H(α) A(ĝ) = A(ĝ) ψ_K(β)` whenever `α M(ĝ) = M(ĝ) β`.
pub fn check_axioms(t: &CartanTheory, budget: usize) -> Result<AxiomReport> {
    let orbit = t.orbit.clone();
    let (i_max, p_max) = (t.i_max(), t.p_max);
    let key = |h: usize| orbit.key(h);

    let mut a1 = ValidationReport::new("axiom 1: simplicial cochain complex of O_G-groups");
    for i in 0..=i_max {
        a1.merge(t.groups[i].validate(&format!("A^{i}")));
    }
    for i in 0..i_max {
        for h in orbit.objects() {
            let (src, tgt) = (t.groups[i].value(h), t.groups[i + 1].value(h));
            for p in 0..=p_max {
                let d = &t.delta[i][h][p];
                if p > 0 {
                    for k in 0..=p {
                        let ok = same(t.delta[i][h][p - 1].after(src.face(p, k)), tgt.face(p, k).after(d));
                        a1.check(ok, "delta commutes with faces", || {
                            format!("delta^{i} d{k} at {}, level {p}", key(h))
                        });
                    }
                }
                if p < p_max {
                    for k in 0..=p {
                        let ok = same(
                            t.delta[i][h][p + 1].after(src.degeneracy(p, k)),
                            tgt.degeneracy(p, k).after(d),
                        );
                        a1.check(ok, "delta commutes with degeneracies", || {
                            format!("delta^{i} s{k} at {}, level {p}", key(h))
                        });
                    }
                }
                if i + 1 < i_max {
                    let ok = matches!(t.delta[i + 1][h][p].after(d), Ok(dd) if dd.is_zero());
                    a1.check(ok, "delta delta = 0", || format!("degree {i} at {}, level {p}", key(h)));
                }
            }
        }
        for f in orbit.morphisms() {
            for p in 0..=p_max {
                let lhs = t.delta[i][f.source][p].after(t.groups[i].map(&f, p));
                let rhs = t.groups[i + 1].map(&f, p).after(&t.delta[i][f.target][p]);
                a1.check(same(lhs, rhs), "delta is natural", || {
                    format!("delta^{i} at {}, level {p}", orbit.morphism_key(&f))
                });
            }
        }
    }

    let mut a2 = ValidationReport::new("axiom 2: exactness");
    for i in 1..i_max {
        for h in orbit.objects() {
            for p in 0..=p_max {
                let level = t.groups[i].value(h).level(p);
                let ker = t.delta[i][h][p].kernel_lattice();
                let im = t.delta[i - 1][h][p].image_lattice();
                let q = FgAbGroup::subquotient(&ker, &im)
                    .map(|g| g.normal_form().to_string())
                    .unwrap_or_else(|_| "image not inside kernel".into());
                a2.check(q == "0", "ker = im", || {
                    format!("degree {i} at {}, level {p}: ker/im = {q} in {level}", key(h))
                });
            }
        }
    }

    let mut a3 = ValidationReport::new("axiom 3: contractible levels");
    for i in 0..=i_max {
        for h in orbit.objects() {
            for n in 0..p_max {
                let pi = t.groups[i].value(h).moore_homotopy(n)?;
                a3.check(pi.is_trivial(), "pi_n = 0", || {
                    format!("pi_{n} A^{i}({}) = {}", key(h), pi.normal_form())
                });
            }
        }
    }

    let mut a4 = ValidationReport::new("axiom 4: Z^0 simplicially trivial with (Z^0)_0 = M");
    for h in orbit.objects() {
        let a0 = t.groups[0].value(h);
        let d0: Vec<AbHom> = if i_max == 0 {
            (0..=p_max)
                .map(|p| AbHom::zero(a0.level(p), &FgAbGroup::trivial()))
                .collect()
        } else {
            t.delta[0][h].clone()
        };
        let (z0, _) = a0.kernel(&d0)?;
        for p in 0..=p_max {
            if p > 0 {
                for k in 0..=p {
                    a4.check(z0.face(p, k).is_iso(), "faces are isomorphisms", || {
                        format!("d{k} on Z^0({})_{p}", key(h))
                    });
                }
            }
            if p < p_max {
                for k in 0..=p {
                    a4.check(z0.degeneracy(p, k).is_iso(), "degeneracies are isomorphisms", || {
                        format!("s{k} on Z^0({})_{p}", key(h))
                    });
                }
            }
        }
        let iota = &t.iota[h];
        let into_z = matches!(d0[0].after(iota), Ok(c) if c.is_zero());
        let onto = d0[0].kernel_lattice().is_sublattice_of(&iota.image_lattice());
        let ok = into_z && onto && iota.is_injective();
        a4.check(ok, "iota: M = (Z^0)_0", || {
            format!(
                "at {}: M = {} but (Z^0)_0 = {}",
                key(h),
                t.m.value(h).normal_form(),
                z0.level(0).normal_form()
            )
        });
    }
    for f in orbit.morphisms() {
        let lhs = t.groups[0].map(&f, 0).after(&t.iota[f.target]);
        let rhs = t.iota[f.source].after(t.m.map(&f));
        a4.check(same(lhs, rhs), "iota is natural", || orbit.morphism_key(&f));
    }

    let mut a5 = ValidationReport::new("axiom 5: psi-equivariance");
    let auts: Vec<Vec<AbHom>> = orbit
        .objects()
        .map(|h| automorphisms(t.m.value(h), budget))
        .collect::<Result<_>>()?;
    for i in 0..=i_max {
        for h in orbit.objects() {
            let a = t.groups[i].value(h);
            for (x, alpha) in auts[h].iter().enumerate() {
                let shown = alpha.matrix().to_string();
                for p in 0..=p_max {
                    let s = t.psi(i, h, p, alpha)?;
                    a5.check(s.is_iso(), "psi is an automorphism", || {
                        format!("psi^{i}_{}({shown}) at level {p}", key(h))
                    });
                    if p > 0 {
                        for k in 0..=p {
                            let ok = same(t.psi(i, h, p - 1, alpha)?.after(a.face(p, k)), a.face(p, k).after(&s));
                            a5.check(ok, "psi is simplicial", || {
                                format!("psi^{i}_{}({shown}) d{k} at level {p}", key(h))
                            });
                        }
                    }
                    if p < p_max {
                        for k in 0..=p {
                            let ok = same(
                                t.psi(i, h, p + 1, alpha)?.after(a.degeneracy(p, k)),
                                a.degeneracy(p, k).after(&s),
                            );
                            a5.check(ok, "psi is simplicial", || {
                                format!("psi^{i}_{}({shown}) s{k} at level {p}", key(h))
                            });
                        }
                    }
                    for beta in &auts[h][..=x] {
                        let prod = alpha.after(beta)?;
                        let lhs = t.psi(i, h, p, &prod);
                        let rhs = t.psi(i, h, p, alpha)?.after(&t.psi(i, h, p, beta)?);
                        a5.check(same(lhs, rhs), "psi is a homomorphism", || {
                            format!("psi^{i}_{} at level {p} on {shown} and {}", key(h), beta.matrix())
                        });
                    }
                    if i < i_max {
                        let lhs = t.delta[i][h][p].after(&s);
                        let rhs = t.psi(i + 1, h, p, alpha)?.after(&t.delta[i][h][p]);
                        a5.check(same(lhs, rhs), "delta psi = psi delta", || {
                            format!("degree {i} at {}, level {p}, alpha = {shown}", key(h))
                        });
                    }
                }
            }
        }
        for f in orbit.morphisms() {
            let mf = t.m.map(&f);
            for alpha in &auts[f.source] {
                for beta in &auts[f.target] {
                    if !same(alpha.after(mf), mf.after(beta)) {
                        continue;
                    }
                    for p in 0..=p_max {
                        let am = t.groups[i].map(&f, p);
                        let lhs = t.psi(i, f.source, p, alpha)?.after(am);
                        let rhs = am.after(&t.psi(i, f.target, p, beta)?);
                        a5.check(same(lhs, rhs), "psi is natural", || {
                            format!("degree {i} at {}, level {p}", orbit.morphism_key(&f))
                        });
                    }
                }
            }
        }
    }
    Ok(AxiomReport {
        i_max,
        p_max,
        axioms: vec![a1, a2, a3, a4, a5],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::FiniteGroup;

    fn z2_over_z2(a: &FgAbGroup) -> CoefficientSystem {
        let o = Arc::new(OrbitCategory::new(FiniteGroup::cyclic(2)));
        CoefficientSystem::constant(o, a)
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&FgAbGroup::cyclic(4), 100).unwrap().len(), 2);
        assert_eq!(automorphisms(&FgAbGroup::cyclic(2).power(2), 100).unwrap().len(), 6);
        assert_eq!(automorphisms(&FgAbGroup::free(1), 100).unwrap().len(), 2);
    }

    #[test]
    fn canonical_theory_passes() {
        let m = z2_over_z2(&FgAbGroup::cyclic(2));
        let t = CartanTheory::canonical(&m, 2, 3).unwrap();
        let r = check_axioms(&t, 1 << 12).unwrap();
        assert!(r.is_ok(), "{r}");
        assert_eq!(t.group(0).value(0).level(2).n_gens(), 3);
        assert!(t.group(2).value(0).level(1).is_trivial());
        let z0 = t.cocycles(0).unwrap();
        assert!(z0.validate("Z^0").is_ok());
        assert_eq!(z0.value(1).level(3).normal_form().to_string(), "Z/2");
    }

    #[test]
    fn planted_controls_fail_their_axiom() {
        let m = z2_over_z2(&FgAbGroup::cyclic(2));
        let t = CartanTheory::canonical(&m, 2, 3)
            .unwrap()
            .with_zero_differential(1)
            .unwrap();
        assert_eq!(check_axioms(&t, 1 << 12).unwrap().failing(), vec![2]);
        let t = CartanTheory::zero(&m, 2, 3).unwrap();
        assert_eq!(check_axioms(&t, 1 << 12).unwrap().failing(), vec![4]);
        let m4 = z2_over_z2(&FgAbGroup::cyclic(4));
        let t = CartanTheory::canonical(&m4, 2, 3)
            .unwrap()
            .with_trivial_psi(1, 1 << 12)
            .unwrap();
        assert_eq!(check_axioms(&t, 1 << 12).unwrap().failing(), vec![5]);
    }
}
