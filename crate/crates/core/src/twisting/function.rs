//! Twisting functions valued in constant groups, their identities, and
//! O_G-twisting functions on the fixed-point complexes of a G-simplicial set.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::abelian::{AbHom, FgAbGroup, OGGroup};
use crate::equivariant::GSimplicialSet;
use crate::error::{Error, Result};
use crate::orbit::FiniteGroup;
use crate::report::ValidationReport;
use crate::simplicial::maps::SimplicialMap;
use crate::simplicial::{FiniteLevels, SimplexId, SimplexRef};

/// The group operations a twisting-function validator needs.
pub trait GroupLike {
    type Elem: Clone;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn same(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn show(&self, a: &Self::Elem) -> String;
}

impl GroupLike for FiniteGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        FiniteGroup::identity(self)
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        FiniteGroup::mul(self, *a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        FiniteGroup::inv(self, *a)
    }

    fn same(&self, a: &usize, b: &usize) -> bool {
        a == b
    }

    fn show(&self, a: &usize) -> String {
        self.name(*a).to_string()
    }
}

/// Automorphisms of a finitely generated abelian group under composition.
pub struct Automorphisms(pub FgAbGroup);

impl GroupLike for Automorphisms {
    type Elem = AbHom;

    fn identity(&self) -> AbHom {
        AbHom::identity(&self.0)
    }

    fn mul(&self, a: &AbHom, b: &AbHom) -> AbHom {
        a.after(b).expect("endomorphisms of one group compose")
    }

    fn inv(&self, a: &AbHom) -> AbHom {
        a.inverse().expect("automorphisms are invertible")
    }

    fn same(&self, a: &AbHom, b: &AbHom) -> bool {
        a.equals(b)
    }

    fn show(&self, a: &AbHom) -> String {
        a.matrix().to_string()
    }
}

/// Checks the twisting identities for a function `tau` on `obj` valued in a
/// constant simplicial group (all its faces and degeneracies are identities):
///
/// * `τ(b) = τ(∂_0 b)⁻¹ τ(∂_1 b)` and `τ(b) = τ(∂_j b)` for `2 ≤ j ≤ q`, when `q ≥ 2`;
/// * `τ(s_j b) = τ(b)` for `1 ≤ j ≤ q`;
/// * `τ(s_0 b) = e`.
///
/// The first family is not imposed at `q = 1`, where it would involve `τ_0`.
pub fn validate_twisting_identities<S, G>(
    obj: &S,
    group: &G,
    tau: impl Fn(&S::Simplex) -> G::Elem,
    q_max: usize,
    subject: &str,
) -> Result<ValidationReport>
where
    S: FiniteLevels,
    G: GroupLike,
{
    let mut rep = ValidationReport::new(subject);
    for q in 0..=q_max {
        for b in obj.simplices(q)? {
            if q >= 2 {
                let t = tau(&b);
                let d0 = tau(&obj.face(0, &b));
                let d1 = tau(&obj.face(1, &b));
                let rhs = group.mul(&group.inv(&d0), &d1);
                rep.check(group.same(&t, &rhs), "d0 identity", || {
                    format!(
                        "tau({}) = {} but tau(d0)^-1 tau(d1) = {}",
                        obj.label(&b),
                        group.show(&t),
                        group.show(&rhs)
                    )
                });
                for j in 2..=q {
                    let dj = tau(&obj.face(j, &b));
                    rep.check(group.same(&t, &dj), "di identity", || {
                        format!(
                            "tau({}) = {} but tau(d{j}) = {}",
                            obj.label(&b),
                            group.show(&t),
                            group.show(&dj)
                        )
                    });
                }
            }
            if q + 1 > q_max {
                continue;
            }
            let s0 = tau(&obj.degeneracy(0, &b));
            rep.check(group.same(&s0, &group.identity()), "normalization", || {
                format!("tau(s0 {}) = {}", obj.label(&b), group.show(&s0))
            });
            if q >= 1 {
                let t = tau(&b);
                for j in 1..=q {
                    let sj = tau(&obj.degeneracy(j, &b));
                    rep.check(group.same(&t, &sj), "si identity", || {
                        format!("tau(s{j} {}) != tau({})", obj.label(&b), obj.label(&b))
                    });
                }
            }
        }
    }
    Ok(rep)
}

/// Value of a twisting function on a degenerate simplex, from its value on the base:
/// the identity when the normal form involves `s_0`, the base value otherwise.
pub fn derived_value<E: Clone>(x: &SimplexRef, identity: E, base_value: impl FnOnce() -> E) -> E {
    if x.word.contains(0) || x.dim() == 0 {
        identity
    } else {
        base_value()
    }
}

/// An O_G-twisting function: for each orbit type `H`, values in `π(G/H)` on the
/// nondegenerate simplices of positive dimension of `X^H`.
#[derive(Debug, Clone)]
pub struct TwistingFunction {
    space: Arc<GSimplicialSet>,
    pi: OGGroup,
    /// `values[h]` keyed by generators of `X` fixed by `H`.
    values: Vec<BTreeMap<SimplexId, usize>>,
}

impl TwistingFunction {
    /// `values[h]` lists `(generator of X fixed by H, element of π(G/H))`; generators
    /// of positive dimension left out take the identity.
    pub fn new(space: Arc<GSimplicialSet>, pi: OGGroup, values: Vec<BTreeMap<SimplexId, usize>>) -> Result<Self> {
        let orbit = space.orbit_category().clone();
        if values.len() != orbit.num_objects() {
            return Err(Error::DimensionMismatch("one value table per orbit type".into()));
        }
        let mut full = Vec::with_capacity(values.len());
        for (h, given) in values.into_iter().enumerate() {
            let grp = pi.value(h);
            let mut table = BTreeMap::new();
            for id in space.complex().all_nondegenerate() {
                if id.dim == 0 || !space.is_fixed_by(id, h) {
                    continue;
                }
                table.insert(id, grp.identity());
            }
            for (id, u) in given {
                if u >= grp.order() {
                    return Err(Error::IndexOutOfRange(format!("element {u} of pi({})", orbit.key(h))));
                }
                match table.get_mut(&id) {
                    Some(slot) => *slot = u,
                    None => {
                        return Err(Error::Invalid(format!(
                            "`{}` is not a positive-dimensional simplex of X^{}",
                            space.complex().name(id),
                            orbit.key(h)
                        )))
                    }
                }
            }
            full.push(table);
        }
        Ok(Self {
            space,
            pi,
            values: full,
        })
    }

    /// `τ ≡ e`.
    pub fn trivial(space: Arc<GSimplicialSet>, pi: OGGroup) -> Self {
        let n = space.orbit_category().num_objects();
        Self::new(space, pi, vec![BTreeMap::new(); n]).expect("identity values are valid")
    }

    pub fn space(&self) -> &Arc<GSimplicialSet> {
        &self.space
    }

    pub fn pi(&self) -> &OGGroup {
        &self.pi
    }

    /// `τ(G/H)` on a generator of `X` fixed by `H`.
    pub fn value_on_generator(&self, h: usize, id: SimplexId) -> usize {
        if id.dim == 0 {
            return self.pi.value(h).identity();
        }
        self.values[h][&id]
    }

    /// `τ(G/H)(x)` for a simplex of `X^H` in the coordinates of `X^H`.
    pub fn value(&self, h: usize, x: &SimplexRef) -> usize {
        let fixed = self.space.fixed_points(h);
        let e = self.pi.value(h).identity();
        derived_value(x, e, || {
            self.value_on_generator(h, fixed.embed[x.base.dim][x.base.index])
        })
    }

    /// Twisting identities on every `X^H` up to `q_max`, and naturality
    /// `τ(G/H)(g x) = π(ĝ) τ(G/K)(x)` on generators.
    pub fn validate(&self, q_max: usize) -> Result<ValidationReport> {
        let orbit = self.space.orbit_category().clone();
        let mut rep = ValidationReport::new("twisting function");
        for h in orbit.objects() {
            let fixed = &self.space.fixed_points(h).complex;
            let r = validate_twisting_identities(
                fixed,
                self.pi.value(h),
                |x| self.value(h, x),
                q_max,
                &format!("X^{}", orbit.key(h)),
            )?;
            for mut v in r.violations {
                v.witness = format!("in X^{}: {}", orbit.key(h), v.witness);
                rep.violations.push(v);
            }
            rep.checks += r.checks;
        }
        for f in orbit.morphisms() {
            for (&id, &u) in &self.values[f.target] {
                let gx = self.space.act_id(f.rep, id);
                let lhs = self.value_on_generator(f.source, gx);
                let rhs = self.pi.map(&f, u);
                rep.check(lhs == rhs, "naturality", || {
                    format!("at {} on {}", orbit.morphism_key(&f), self.space.complex().name(id))
                });
            }
        }
        Ok(rep)
    }

    /// `θ(τ)(G/H): X^H → W̄π(G/H)`, `x ↦ [τ(x), τ(∂_0 x), …, τ(∂_0^{q−1} x)]`.
    pub fn theta(&self, h: usize) -> SimplicialMap<Vec<usize>> {
        let fixed = &self.space.fixed_points(h).complex;
        SimplicialMap::from_fn(fixed, |id| {
            let mut x = SimplexRef::nondegenerate(id);
            let mut out = Vec::with_capacity(id.dim);
            for _ in 0..id.dim {
                out.push(self.value(h, &x));
                x = fixed.face(0, &x).expect("positive dimension");
            }
            out
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::OrbitCategory;
    use crate::simplicial::FiniteSimplicialSet;

    #[test]
    fn circle_twist_is_valid() {
        let mut x = FiniteSimplicialSet::new(4);
        let v = SimplexRef::nondegenerate(x.add_simplex("v", vec![]).unwrap());
        let e = x.add_simplex("e", vec![v.clone(), v]).unwrap();
        let o = Arc::new(OrbitCategory::new(FiniteGroup::trivial()));
        let gx = Arc::new(GSimplicialSet::trivial_action(x, o.clone()).unwrap());
        let pi = OGGroup::constant(o, &FiniteGroup::cyclic(2));
        let tau = TwistingFunction::new(gx, pi, vec![BTreeMap::from([(e, 1)])]).unwrap();
        let rep = tau.validate(3).unwrap();
        assert!(rep.is_ok(), "{rep}");
    }
}
