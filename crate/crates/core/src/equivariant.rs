//! Simplicial sets with an action of a finite group, their fixed-point
//! complexes, and orbit decompositions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::orbit::{OrbitCategory, OrbitMorphism};
use crate::report::ValidationReport;
use crate::simplicial::maps::{validate_map, SimplicialMap};
use crate::simplicial::product::{product_with_interval, Cylinder};
use crate::simplicial::{FiniteSimplicialSet, SimplexId, SimplexRef};

/// Per group element, per dimension, the permutation of nondegenerate simplices.
pub type ActionTable = Vec<Vec<Vec<usize>>>;

/// The fixed complex `X^H` together with its embedding into `X`.
#[derive(Debug, Clone)]
pub struct FixedComplex {
    pub complex: FiniteSimplicialSet,
    /// `embed[n][i]`: the generator of `X` underlying generator `(n, i)` of `X^H`.
    pub embed: Vec<Vec<SimplexId>>,
    restrict: BTreeMap<SimplexId, SimplexId>,
}

impl FixedComplex {
    /// The generator of `X^H` for a fixed generator of `X`.
    pub fn restrict(&self, id: SimplexId) -> Option<SimplexId> {
        self.restrict.get(&id).copied()
    }

    pub fn restrict_ref(&self, x: &SimplexRef) -> Option<SimplexRef> {
        Some(SimplexRef {
            word: x.word.clone(),
            base: self.restrict(x.base)?,
        })
    }

    pub fn embed_ref(&self, x: &SimplexRef) -> SimplexRef {
        SimplexRef {
            word: x.word.clone(),
            base: self.embed[x.base.dim][x.base.index],
        }
    }
}

/// One orbit of nondegenerate `n`-simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub rep: SimplexId,
    /// Index of the stabilizer `G_rep` in the orbit category.
    pub stabilizer: usize,
    /// Every member `σ` with a transporter `g`, `σ = g · rep`.
    pub members: Vec<(SimplexId, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub dim: usize,
    pub orbits: Vec<Orbit>,
}

impl OrbitDecomposition {
    /// Orbit index and transporter for a generator of this dimension.
    pub fn locate(&self, id: SimplexId) -> Option<(usize, usize)> {
        self.orbits
            .iter()
            .enumerate()
            .find_map(|(j, o)| o.members.iter().find(|(s, _)| *s == id).map(|&(_, g)| (j, g)))
    }
}

/// Which element of each orbit serves as representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RepChoice {
    #[default]
    First,
    Last,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connectivity {
    pub connected: bool,
    /// Generators `v` with `g v = v` for all `g`.
    pub fixed_vertices: Vec<SimplexId>,
    /// Subgroup keys whose fixed complex is empty or disconnected.
    pub failures: Vec<String>,
}

/// A finite simplicial set with a simplicial action of a finite group.
#[derive(Debug, Clone)]
pub struct GSimplicialSet {
    complex: FiniteSimplicialSet,
    orbit: Arc<OrbitCategory>,
    action: ActionTable,
    fixed: Vec<FixedComplex>,
}

/// Checks that `table` is a group action by simplicial automorphisms.
pub fn validate_action(complex: &FiniteSimplicialSet, orbit: &OrbitCategory, table: &ActionTable) -> ValidationReport {
    let g = orbit.group();
    let mut rep = ValidationReport::new("group action");
    let shape_ok = table.len() == g.order()
        && table.iter().all(|per_dim| {
            per_dim.len() == complex.truncation() + 1
                && per_dim
                    .iter()
                    .enumerate()
                    .all(|(n, p)| p.len() == complex.num_nondegenerate(n))
        });
    if !shape_ok {
        rep.fail("shape", "action table does not match group and complex");
        return rep;
    }
    let act = |a: usize, id: SimplexId| SimplexId {
        dim: id.dim,
        index: table[a][id.dim][id.index],
    };
    for id in complex.all_nondegenerate() {
        rep.check(act(g.identity(), id) == id, "identity acts trivially", || {
            format!("e moves {}", complex.name(id))
        });
        for a in g.elements() {
            for b in g.elements() {
                let lhs = act(g.mul(a, b), id);
                let rhs = act(a, act(b, id));
                rep.check(lhs == rhs, "(gh)x = g(hx)", || {
                    format!("g={}, h={}, x={}", g.name(a), g.name(b), complex.name(id))
                });
            }
            if id.dim == 0 {
                continue;
            }
            let gx = act(a, id);
            for (i, f) in complex.stored_faces(id).iter().enumerate() {
                let lhs = complex.stored_faces(gx)[i].clone();
                let rhs = SimplexRef {
                    word: f.word.clone(),
                    base: act(a, f.base),
                };
                rep.check(lhs == rhs, "commutes with faces", || {
                    format!(
                        "d{i}({} {}) = {} but {} d{i} {} = {}",
                        g.name(a),
                        complex.name(id),
                        complex.display(&lhs),
                        g.name(a),
                        complex.name(id),
                        complex.display(&rhs)
                    )
                });
            }
        }
    }
    rep
}

/// Extends an action given on generators of `G` to all of `G`.
///
/// `gens` pairs a group element with its permutation table. Fails if two
/// words for the same element act differently.
pub fn action_from_generators(
    complex: &FiniteSimplicialSet,
    orbit: &OrbitCategory,
    gens: &[(usize, Vec<Vec<usize>>)],
) -> Result<ActionTable> {
    let g = orbit.group();
    let identity: Vec<Vec<usize>> = (0..=complex.truncation())
        .map(|n| (0..complex.num_nondegenerate(n)).collect())
        .collect();
    for (a, perm) in gens {
        let ok = perm.len() == identity.len()
            && perm.iter().zip(&identity).all(|(p, id)| {
                let set: BTreeSet<usize> = p.iter().copied().collect();
                p.len() == id.len() && set.len() == p.len() && p.iter().all(|&x| x < p.len())
            });
        if !ok {
            return Err(Error::Invalid(format!(
                "action of `{}` is not a permutation of each level",
                g.name(*a)
            )));
        }
    }
    let mut table: Vec<Option<Vec<Vec<usize>>>> = vec![None; g.order()];
    table[g.identity()] = Some(identity);
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let ax = table[x].clone().expect("queued elements are assigned");
        for (a, pa) in gens {
            let y = g.mul(*a, x);
            let ay: Vec<Vec<usize>> = ax
                .iter()
                .zip(pa)
                .map(|(px, pg)| px.iter().map(|&i| pg[i]).collect())
                .collect();
            match &table[y] {
                Some(existing) if *existing != ay => {
                    return Err(Error::Invalid(format!(
                        "generator tables do not define an action: two words for `{}` disagree",
                        g.name(y)
                    )))
                }
                Some(_) => {}
                None => {
                    table[y] = Some(ay);
                    queue.push_back(y);
                }
            }
        }
    }
    table
        .into_iter()
        .enumerate()
        .map(|(a, t)| {
            t.ok_or_else(|| {
                Error::Invalid(format!(
                    "element `{}` is not generated by the given action generators",
                    g.name(a)
                ))
            })
        })
        .collect()
}

impl GSimplicialSet {
    /// Builds from a full action table; rejects anything that is not a
    /// simplicial group action.
    pub fn new(complex: FiniteSimplicialSet, orbit: Arc<OrbitCategory>, action: ActionTable) -> Result<Self> {
        let rep = validate_action(&complex, &orbit, &action);
        if !rep.is_ok() {
            return Err(Error::Invalid(rep.to_string()));
        }
        let mut x = Self {
            complex,
            orbit,
            action,
            fixed: Vec::new(),
        };
        x.fixed = x.orbit.objects().map(|h| x.build_fixed(h)).collect::<Result<_>>()?;
        Ok(x)
    }

    /// The trivial action of `orbit`'s group.
    pub fn trivial_action(complex: FiniteSimplicialSet, orbit: Arc<OrbitCategory>) -> Result<Self> {
        let identity: Vec<Vec<usize>> = (0..=complex.truncation())
            .map(|n| (0..complex.num_nondegenerate(n)).collect())
            .collect();
        let action = vec![identity; orbit.group().order()];
        Self::new(complex, orbit, action)
    }

    pub fn complex(&self) -> &FiniteSimplicialSet {
        &self.complex
    }

    pub fn orbit_category(&self) -> &Arc<OrbitCategory> {
        &self.orbit
    }

    pub fn action_table(&self) -> &ActionTable {
        &self.action
    }

    pub fn act_id(&self, g: usize, id: SimplexId) -> SimplexId {
        SimplexId {
            dim: id.dim,
            index: self.action[g][id.dim][id.index],
        }
    }

    pub fn act(&self, g: usize, x: &SimplexRef) -> SimplexRef {
        SimplexRef {
            word: x.word.clone(),
            base: self.act_id(g, x.base),
        }
    }

    /// Index of the stabilizer subgroup of a generator.
    pub fn stabilizer(&self, id: SimplexId) -> usize {
        let grp = self.orbit.group();
        let members: Vec<usize> = grp.elements().filter(|&g| self.act_id(g, id) == id).collect();
        let s = grp.generated(&members);
        self.orbit.index_of(&s).expect("stabilizers are subgroups")
    }

    pub fn is_fixed_by(&self, id: SimplexId, h: usize) -> bool {
        self.orbit
            .subgroup(h)
            .members()
            .iter()
            .all(|&g| self.act_id(g, id) == id)
    }

    fn build_fixed(&self, h: usize) -> Result<FixedComplex> {
        let mut complex = FiniteSimplicialSet::new(self.complex.truncation());
        let mut embed = vec![Vec::new(); self.complex.truncation() + 1];
        let mut restrict = BTreeMap::new();
        for id in self.complex.all_nondegenerate() {
            if !self.is_fixed_by(id, h) {
                continue;
            }
            let faces = self
                .complex
                .stored_faces(id)
                .iter()
                .map(|f| {
                    restrict
                        .get(&f.base)
                        .map(|&b| SimplexRef {
                            word: f.word.clone(),
                            base: b,
                        })
                        .ok_or_else(|| Error::Internal("face of a fixed simplex is not fixed".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            let new = complex.add_simplex_at(id.dim, self.complex.name(id), faces)?;
            embed[id.dim].push(id);
            restrict.insert(id, new);
        }
        Ok(FixedComplex {
            complex,
            embed,
            restrict,
        })
    }

    /// `X^H` for the subgroup with index `h`.
    pub fn fixed_points(&self, h: usize) -> &FixedComplex {
        &self.fixed[h]
    }

    /// `ΦX(ĝ): X^K → X^H`, `x ↦ g x`, for `ĝ: G/H → G/K`.
    pub fn phi_map(&self, f: &OrbitMorphism) -> SimplicialMap {
        let src = &self.fixed[f.target];
        let dst = &self.fixed[f.source];
        SimplicialMap::from_fn(&src.complex, |id| {
            let x = src.embed[id.dim][id.index];
            let gx = self.act_id(f.rep, x);
            SimplexRef::nondegenerate(dst.restrict(gx).expect("g X^K lies in X^H"))
        })
    }

    /// Checks that every `ΦX(ĝ)` is a simplicial map and that `ΦX` is a
    /// contravariant functor on `O_G`.
    pub fn validate_phi(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("O_G-simplicial set");
        let morphisms = self.orbit.morphisms();
        let maps: BTreeMap<OrbitMorphism, SimplicialMap> = morphisms.iter().map(|f| (*f, self.phi_map(f))).collect();
        for f in &morphisms {
            let m = &maps[f];
            let r = validate_map(&self.fixed[f.target].complex, &self.fixed[f.source].complex, m);
            if !r.is_ok() {
                rep.fail("simplicial", format!("{}: {r}", self.orbit.morphism_key(f)));
            } else {
                rep.check(true, "simplicial", String::new);
            }
            if self.orbit.is_identity(f) {
                let ok = self.fixed[f.target]
                    .complex
                    .all_nondegenerate()
                    .all(|id| m.value(id) == &SimplexRef::nondegenerate(id));
                rep.check(ok, "identity", || self.orbit.morphism_key(f));
            }
        }
        for f in &morphisms {
            for h in &morphisms {
                if f.target != h.source {
                    continue;
                }
                // Φ(h ∘ f) = Φ(f) ∘ Φ(h)
                let hf = self.orbit.compose(f, h).expect("composable");
                let lhs = &maps[&hf];
                let src = &self.fixed[h.target].complex;
                let ok = src.all_nondegenerate().all(|id| {
                    let mid = maps[h].value(id);
                    maps[f].value(mid.base) == lhs.value(id)
                });
                rep.check(ok, "functoriality", || {
                    format!("{} then {}", self.orbit.morphism_key(f), self.orbit.morphism_key(h))
                });
            }
        }
        rep
    }

    pub fn orbit_decomposition(&self, n: usize) -> OrbitDecomposition {
        self.orbit_decomposition_with(n, RepChoice::First)
    }

    /// Orbits of nondegenerate `n`-simplices with the chosen representatives;
    /// transporters are the least group elements that work.
    pub fn orbit_decomposition_with(&self, n: usize, choice: RepChoice) -> OrbitDecomposition {
        let grp = self.orbit.group();
        let mut seen = BTreeSet::new();
        let mut orbits = Vec::new();
        for id in self.complex.nondegenerate(n) {
            if seen.contains(&id) {
                continue;
            }
            let members: BTreeSet<SimplexId> = grp.elements().map(|g| self.act_id(g, id)).collect();
            seen.extend(members.iter().copied());
            let rep = match choice {
                RepChoice::First => *members.iter().next().expect("nonempty"),
                RepChoice::Last => *members.iter().next_back().expect("nonempty"),
            };
            let members = members
                .into_iter()
                .map(|s| {
                    let g = grp
                        .elements()
                        .find(|&g| self.act_id(g, rep) == s)
                        .expect("orbit members are reachable");
                    (s, g)
                })
                .collect();
            orbits.push(Orbit {
                rep,
                stabilizer: self.stabilizer(rep),
                members,
            });
        }
        OrbitDecomposition { dim: n, orbits }
    }

    /// G-connectivity: every `X^H` nonempty and connected through its edges.
    pub fn check_g_connected(&self) -> Connectivity {
        let mut failures = Vec::new();
        for h in self.orbit.objects() {
            if !is_connected(&self.fixed[h].complex) {
                failures.push(self.orbit.key(h));
            }
        }
        let whole = self.orbit.whole_object();
        let fixed_vertices = self.fixed[whole].embed[0].clone();
        Connectivity {
            connected: failures.is_empty(),
            fixed_vertices,
            failures,
        }
    }

    /// `X × Δ[1]` with `G` acting on the first factor.
    pub fn product_with_interval(&self) -> Result<(GSimplicialSet, Cylinder)> {
        let cyl = product_with_interval(&self.complex)?;
        let p = &cyl.product;
        let grp = self.orbit.group();
        let mut action = Vec::with_capacity(grp.order());
        for g in grp.elements() {
            let per_dim = (0..=p.complex.truncation())
                .map(|n| {
                    p.complex
                        .nondegenerate(n)
                        .map(|id| {
                            let (x, y) = p.components(&SimplexRef::nondegenerate(id));
                            let z = p.pair(&self.act(g, &x), &y);
                            debug_assert!(!z.is_degenerate());
                            z.base.index
                        })
                        .collect()
                })
                .collect();
            action.push(per_dim);
        }
        let gx = GSimplicialSet::new(p.complex.clone(), self.orbit.clone(), action)?;
        Ok((gx, cyl))
    }
}

/// Whether a simplicial set is nonempty with a connected 1-skeleton.
pub fn is_connected(x: &FiniteSimplicialSet) -> bool {
    let nv = x.num_nondegenerate(0);
    if nv == 0 {
        return false;
    }
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], a: usize) -> usize {
        let mut r = a;
        while p[r] != r {
            r = p[r];
        }
        p[a] = r;
        r
    }
    for e in x.nondegenerate(1) {
        let f = x.stored_faces(e);
        let a = find(&mut parent, f[0].base.index);
        let b = find(&mut parent, f[1].base.index);
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (0..nv).all(|v| find(&mut parent, v) == root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::FiniteGroup;

    fn ref_circle() -> GSimplicialSet {
        let mut x = FiniteSimplicialSet::new(1);
        let a = SimplexRef::nondegenerate(x.add_simplex("a", vec![]).unwrap());
        let b = SimplexRef::nondegenerate(x.add_simplex("b", vec![]).unwrap());
        x.add_simplex("e+", vec![b.clone(), a.clone()]).unwrap();
        x.add_simplex("e-", vec![b, a]).unwrap();
        let o = Arc::new(OrbitCategory::new(FiniteGroup::cyclic(2)));
        let swap = vec![vec![0, 1], vec![1, 0]];
        let action = action_from_generators(&x, &o, &[(1, swap)]).unwrap();
        GSimplicialSet::new(x, o, action).unwrap()
    }

    #[test]
    fn reflection_circle_fixed_points() {
        let x = ref_circle();
        let g = x.orbit_category().whole_object();
        assert_eq!(x.fixed_points(g).complex.counts(), vec![2, 0]);
        let e = x.orbit_category().trivial_object();
        assert_eq!(x.fixed_points(e).complex.counts(), vec![2, 2]);
        assert!(x.validate_phi().is_ok());
    }

    #[test]
    fn reflection_circle_orbits() {
        let x = ref_circle();
        let d0 = x.orbit_decomposition(0);
        assert_eq!(d0.orbits.len(), 2);
        let whole = x.orbit_category().whole_object();
        assert!(d0.orbits.iter().all(|o| o.stabilizer == whole));
        let d1 = x.orbit_decomposition(1);
        assert_eq!(d1.orbits.len(), 1);
        assert_eq!(d1.orbits[0].members.len(), 2);
        let c = x.check_g_connected();
        assert!(!c.connected);
        assert_eq!(c.fixed_vertices.len(), 2);
    }

    #[test]
    fn inconsistent_generators_rejected() {
        let mut x = FiniteSimplicialSet::new(0);
        x.add_simplex("p", vec![]).unwrap();
        x.add_simplex("q", vec![]).unwrap();
        x.add_simplex("r", vec![]).unwrap();
        let o = OrbitCategory::new(FiniteGroup::cyclic(2));
        // a 3-cycle cannot be the action of an element of order 2
        let err = action_from_generators(&x, &o, &[(1, vec![vec![1, 2, 0]])]);
        assert!(err.is_err());
    }
}
