//! Functors on the orbit category: coefficient systems (abelian `O_G`-groups),
//! `O_G`-groups of finite groups, and π-modules.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::group::{AbHom, FgAbGroup};
use super::matrix::IntMatrix;
use crate::error::{Error, Result};
use crate::orbit::{FiniteGroup, OrbitCategory, OrbitMorphism};
use crate::report::ValidationReport;

/// Contravariant functor `O_G → Ab`: for `ĝ: G/H → G/K` a homomorphism
/// `M(ĝ): M(G/K) → M(G/H)`.
#[derive(Debug, Clone)]
pub struct CoefficientSystem {
    orbit: Arc<OrbitCategory>,
    values: Vec<FgAbGroup>,
    maps: BTreeMap<OrbitMorphism, AbHom>,
}

impl CoefficientSystem {
    /// `maps` must cover every non-identity morphism; identities default to
    /// identity matrices when absent.
    pub fn new(
        orbit: Arc<OrbitCategory>,
        values: Vec<FgAbGroup>,
        mut maps: BTreeMap<OrbitMorphism, AbHom>,
    ) -> Result<Self> {
        if values.len() != orbit.num_objects() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} orbit types",
                values.len(),
                orbit.num_objects()
            )));
        }
        for f in orbit.morphisms() {
            match maps.get(&f) {
                Some(m) => {
                    if m.source() != &values[f.target] || m.target() != &values[f.source] {
                        return Err(Error::DimensionMismatch(format!(
                            "M({}) does not run M(G/K) -> M(G/H)",
                            orbit.morphism_key(&f)
                        )));
                    }
                }
                None if orbit.is_identity(&f) => {
                    maps.insert(f, AbHom::identity(&values[f.source]));
                }
                None => return Err(Error::Invalid(format!("missing M({})", orbit.morphism_key(&f)))),
            }
        }
        Ok(Self { orbit, values, maps })
    }

    /// Every value `a`, every map the identity.
    pub fn constant(orbit: Arc<OrbitCategory>, a: &FgAbGroup) -> Self {
        let values = vec![a.clone(); orbit.num_objects()];
        let maps = orbit.morphisms().into_iter().map(|f| (f, AbHom::identity(a))).collect();
        Self { orbit, values, maps }
    }

    pub fn orbit_category(&self) -> &Arc<OrbitCategory> {
        &self.orbit
    }

    pub fn value(&self, h: usize) -> &FgAbGroup {
        &self.values[h]
    }

    pub fn values(&self) -> &[FgAbGroup] {
        &self.values
    }

    pub fn map(&self, f: &OrbitMorphism) -> &AbHom {
        &self.maps[f]
    }

    /// Identities and `M(h ∘ f) = M(f) ∘ M(h)` on every composable pair.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("coefficient system");
        let morphisms = self.orbit.morphisms();
        for f in &morphisms {
            let m = &self.maps[f];
            rep.check(m.is_well_defined(), "well-defined", || self.orbit.morphism_key(f));
            if self.orbit.is_identity(f) {
                rep.check(m.equals(&AbHom::identity(&self.values[f.source])), "identity", || {
                    self.orbit.morphism_key(f)
                });
            }
        }
        for f in &morphisms {
            for h in &morphisms {
                if f.target != h.source {
                    continue;
                }
                let hf = self.orbit.compose(f, h).expect("composable");
                let rhs = self.maps[f].after(&self.maps[h]).expect("composable");
                rep.check(self.maps[&hf].equals(&rhs), "functoriality", || {
                    format!(
                        "M({}) != M({}) M({})",
                        self.orbit.morphism_key(&hf),
                        self.orbit.morphism_key(f),
                        self.orbit.morphism_key(h)
                    )
                });
            }
        }
        rep
    }
}

/// Contravariant functor from `O_G` to finite groups.
#[derive(Debug, Clone)]
pub struct OGGroup {
    orbit: Arc<OrbitCategory>,
    values: Vec<FiniteGroup>,
    maps: BTreeMap<OrbitMorphism, Vec<usize>>,
}

impl OGGroup {
    pub fn new(
        orbit: Arc<OrbitCategory>,
        values: Vec<FiniteGroup>,
        mut maps: BTreeMap<OrbitMorphism, Vec<usize>>,
    ) -> Result<Self> {
        if values.len() != orbit.num_objects() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} orbit types",
                values.len(),
                orbit.num_objects()
            )));
        }
        for f in orbit.morphisms() {
            match maps.get(&f) {
                Some(m) => {
                    if m.len() != values[f.target].order() || m.iter().any(|&x| x >= values[f.source].order()) {
                        return Err(Error::DimensionMismatch(format!(
                            "pi({}) has the wrong shape",
                            orbit.morphism_key(&f)
                        )));
                    }
                }
                None if orbit.is_identity(&f) => {
                    maps.insert(f, values[f.source].elements().collect());
                }
                None => return Err(Error::Invalid(format!("missing pi({})", orbit.morphism_key(&f)))),
            }
        }
        Ok(Self { orbit, values, maps })
    }

    pub fn constant(orbit: Arc<OrbitCategory>, group: &FiniteGroup) -> Self {
        let values = vec![group.clone(); orbit.num_objects()];
        let maps = orbit
            .morphisms()
            .into_iter()
            .map(|f| (f, group.elements().collect()))
            .collect();
        Self { orbit, values, maps }
    }

    pub fn trivial(orbit: Arc<OrbitCategory>) -> Self {
        Self::constant(orbit, &FiniteGroup::trivial())
    }

    pub fn orbit_category(&self) -> &Arc<OrbitCategory> {
        &self.orbit
    }

    pub fn value(&self, h: usize) -> &FiniteGroup {
        &self.values[h]
    }

    /// `π(ĝ)(v)` for `v ∈ π(G/K)`.
    pub fn map(&self, f: &OrbitMorphism, v: usize) -> usize {
        self.maps[f][v]
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("O_G-group");
        let morphisms = self.orbit.morphisms();
        for f in &morphisms {
            let m = &self.maps[f];
            rep.check(
                self.values[f.target].is_homomorphism(&self.values[f.source], m),
                "homomorphism",
                || self.orbit.morphism_key(f),
            );
            if self.orbit.is_identity(f) {
                rep.check(m.iter().enumerate().all(|(i, &x)| i == x), "identity", || {
                    self.orbit.morphism_key(f)
                });
            }
        }
        for f in &morphisms {
            for h in &morphisms {
                if f.target != h.source {
                    continue;
                }
                let hf = self.orbit.compose(f, h).expect("composable");
                let ok = self.values[h.target]
                    .elements()
                    .all(|v| self.maps[&hf][v] == self.maps[f][self.maps[h][v]]);
                rep.check(ok, "functoriality", || {
                    format!(
                        "pi({}) != pi({}) pi({})",
                        self.orbit.morphism_key(&hf),
                        self.orbit.morphism_key(f),
                        self.orbit.morphism_key(h)
                    )
                });
            }
        }
        rep
    }
}

/// A π-module: per orbit type, an action `φ_H: π(G/H) → Aut(M(G/H))`.
#[derive(Debug, Clone)]
pub struct PiModule {
    pi: OGGroup,
    module: CoefficientSystem,
    action: Vec<Vec<AbHom>>,
}

impl PiModule {
    /// `action[h][u]` is the matrix of `φ_H(u)` on generators of `M(G/H)`.
    pub fn new(pi: OGGroup, module: CoefficientSystem, action: Vec<Vec<IntMatrix>>) -> Result<Self> {
        let orbit = module.orbit_category().clone();
        if action.len() != orbit.num_objects() {
            return Err(Error::DimensionMismatch("one action per orbit type".into()));
        }
        let mut homs = Vec::with_capacity(action.len());
        for (h, mats) in action.into_iter().enumerate() {
            if mats.len() != pi.value(h).order() {
                return Err(Error::DimensionMismatch(format!(
                    "action on {} lists {} matrices for a group of order {}",
                    orbit.key(h),
                    mats.len(),
                    pi.value(h).order()
                )));
            }
            let m = module.value(h);
            homs.push(
                mats.into_iter()
                    .map(|a| AbHom::new(m.clone(), m.clone(), a))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(Self {
            pi,
            module,
            action: homs,
        })
    }

    /// π acting trivially.
    pub fn trivial(pi: OGGroup, module: CoefficientSystem) -> Self {
        let action = module
            .orbit_category()
            .objects()
            .map(|h| vec![AbHom::identity(module.value(h)); pi.value(h).order()])
            .collect();
        Self { pi, module, action }
    }

    pub fn pi(&self) -> &OGGroup {
        &self.pi
    }

    pub fn module(&self) -> &CoefficientSystem {
        &self.module
    }

    pub fn phi(&self, h: usize, u: usize) -> &AbHom {
        &self.action[h][u]
    }

    /// `φ_H(u)⁻¹ = φ_H(u⁻¹)`.
    pub fn phi_inverse(&self, h: usize, u: usize) -> &AbHom {
        &self.action[h][self.pi.value(h).inv(u)]
    }

    /// Homomorphism property of each `φ_H` and the equivariance law
    /// `φ_H(π(ĝ)v) ∘ M(ĝ) = M(ĝ) ∘ φ_K(v)`.
    pub fn validate(&self) -> ValidationReport {
        let orbit = self.module.orbit_category();
        let mut rep = ValidationReport::new("pi-module");
        for h in orbit.objects() {
            let grp = self.pi.value(h);
            let m = self.module.value(h);
            rep.check(
                self.action[h][grp.identity()].equals(&AbHom::identity(m)),
                "identity acts trivially",
                || orbit.key(h),
            );
            for u in grp.elements() {
                for v in grp.elements() {
                    let lhs = &self.action[h][grp.mul(u, v)];
                    let rhs = self.action[h][u].after(&self.action[h][v]).expect("endomorphisms");
                    rep.check(lhs.equals(&rhs), "homomorphism", || {
                        format!("phi_{}({} {})", orbit.key(h), grp.name(u), grp.name(v))
                    });
                }
            }
        }
        for f in orbit.morphisms() {
            let mf = self.module.map(&f);
            for v in self.pi.value(f.target).elements() {
                let pv = self.pi.map(&f, v);
                let lhs = self.action[f.source][pv].after(mf).expect("composable");
                let rhs = mf.after(&self.action[f.target][v]).expect("composable");
                rep.check(lhs.equals(&rhs), "equivariance", || {
                    format!(
                        "at {} with v = {}",
                        orbit.morphism_key(&f),
                        self.pi.value(f.target).name(v)
                    )
                });
            }
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubling_restriction_is_a_functor() {
        let o = Arc::new(OrbitCategory::new(FiniteGroup::cyclic(2)));
        let z = FgAbGroup::free(1);
        let (e, g) = (o.trivial_object(), o.whole_object());
        let mut maps = BTreeMap::new();
        let res = o.hom_set(e, g)[0];
        maps.insert(
            res,
            AbHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[[2]])).unwrap(),
        );
        let t = o.morphism(e, e, 1).unwrap();
        maps.insert(t, AbHom::identity(&z));
        let m = CoefficientSystem::new(o, vec![z.clone(), z], maps).unwrap();
        assert!(m.validate().is_ok());
    }

    #[test]
    fn planted_non_equivariant_action() {
        // G = Z/2, π constant Z/2, M constant Z; φ_e nontrivial but φ_G trivial
        let o = Arc::new(OrbitCategory::new(FiniteGroup::cyclic(2)));
        let pi = OGGroup::constant(o.clone(), &FiniteGroup::cyclic(2));
        let m = CoefficientSystem::constant(o, &FgAbGroup::free(1));
        let id = IntMatrix::identity(1);
        let neg = IntMatrix::from_rows(&[[-1]]);
        let phi = PiModule::new(pi, m, vec![vec![id.clone(), neg], vec![id.clone(), id]]).unwrap();
        let rep = phi.validate();
        assert!(!rep.is_ok());
        assert!(rep.violations.iter().all(|v| v.rule == "equivariance"));
    }
}
