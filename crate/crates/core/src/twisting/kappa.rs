//! The fundamental-groupoid twisting function `κ`: edge-path loops at a
//! G-fixed basepoint, acting on coefficients through per-edge automorphisms.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::abelian::{AbHom, CoefficientSystem};
use crate::equivariant::GSimplicialSet;
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::simplicial::{FiniteSimplicialSet, SimplexId, SimplexRef};

/// One traversal of a nondegenerate 1-simplex: forward runs `∂_1 e → ∂_0 e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeStep {
    pub edge: SimplexId,
    pub forward: bool,
}

/// An edge path in traversal order. In `a ∘ b`, `b` is traversed first.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeWord {
    pub steps: Vec<EdgeStep>,
}

fn endpoints(x: &FiniteSimplicialSet, e: SimplexId) -> (SimplexId, SimplexId) {
    let f = x.stored_faces(e);
    (f[1].base, f[0].base)
}

impl EdgeWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(edge: SimplexId, forward: bool) -> Self {
        Self {
            steps: vec![EdgeStep { edge, forward }],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `self` traversed first, then `next`; adjacent inverse steps cancel.
    pub fn then(&self, next: &EdgeWord) -> EdgeWord {
        let mut steps = self.steps.clone();
        for s in &next.steps {
            match steps.last() {
                Some(t) if t.edge == s.edge && t.forward != s.forward => {
                    steps.pop();
                }
                _ => steps.push(*s),
            }
        }
        EdgeWord { steps }
    }

    pub fn inverse(&self) -> EdgeWord {
        EdgeWord {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| EdgeStep {
                    edge: s.edge,
                    forward: !s.forward,
                })
                .collect(),
        }
    }

    /// `g · w`, edge by edge.
    pub fn transport(&self, x: &GSimplicialSet, g: usize) -> EdgeWord {
        EdgeWord {
            steps: self
                .steps
                .iter()
                .map(|s| EdgeStep {
                    edge: x.act_id(g, s.edge),
                    forward: s.forward,
                })
                .collect(),
        }
    }

    /// The end vertex when starting from `start`, or `None` if some step does
    /// not begin where the previous one ended.
    pub fn follow(&self, x: &FiniteSimplicialSet, start: SimplexId) -> Option<SimplexId> {
        let mut at = start;
        for s in &self.steps {
            if s.edge.dim != 1 {
                return None;
            }
            let (a, b) = endpoints(x, s.edge);
            let (from, to) = if s.forward { (a, b) } else { (b, a) };
            if from != at {
                return None;
            }
            at = to;
        }
        Some(at)
    }

    pub fn display(&self, x: &FiniteSimplicialSet) -> String {
        if self.steps.is_empty() {
            return "()".into();
        }
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| format!("({},{})", x.name(s.edge), if s.forward { "+" } else { "-" }))
            .collect();
        parts.join("")
    }
}

/// Basepoint `v` and paths `ω_x` from `v` to every vertex, `G`-equivariant:
/// `ω_{gx} = g ω_x`.
#[derive(Debug, Clone)]
pub struct Kappa {
    space: Arc<GSimplicialSet>,
    basepoint: SimplexId,
    paths: BTreeMap<SimplexId, EdgeWord>,
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.space.complex();
        writeln!(f, "basepoint {}", x.name(self.basepoint))?;
        for (v, w) in &self.paths {
            writeln!(f, "  omega({}) = {}", x.name(*v), w.display(x))?;
        }
        Ok(())
    }
}

/// A shortest edge path from `from` to `to` through edges of `X` fixed by `h`.
fn bfs_path(x: &GSimplicialSet, h: usize, from: SimplexId, to: SimplexId) -> Option<EdgeWord> {
    let c = x.complex();
    let mut prev: BTreeMap<SimplexId, (SimplexId, EdgeStep)> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = std::collections::BTreeSet::from([from]);
    while let Some(at) = queue.pop_front() {
        if at == to {
            let mut steps = Vec::new();
            let mut cur = to;
            while cur != from {
                let (p, s) = prev[&cur];
                steps.push(s);
                cur = p;
            }
            steps.reverse();
            return Some(EdgeWord { steps });
        }
        for e in c.nondegenerate(1) {
            if !x.is_fixed_by(e, h) {
                continue;
            }
            let (a, b) = endpoints(c, e);
            for (src, dst, forward) in [(a, b, true), (b, a, false)] {
                if src == at && seen.insert(dst) {
                    prev.insert(dst, (at, EdgeStep { edge: e, forward }));
                    queue.push_back(dst);
                }
            }
        }
    }
    None
}

impl Kappa {
    /// `given` may name a path for any vertex; per orbit the first given
    /// member anchors the orbit and any other given member must agree with
    /// transport. Orbits without a given path get a shortest path in the
    /// fixed complex of the representative's stabilizer.
    pub fn new(space: Arc<GSimplicialSet>, basepoint: SimplexId, given: BTreeMap<SimplexId, EdgeWord>) -> Result<Self> {
        let c = space.complex();
        let orbit = space.orbit_category().clone();
        if basepoint.dim != 0 || basepoint.index >= c.num_nondegenerate(0) {
            return Err(Error::Invalid("the basepoint must be a vertex".into()));
        }
        if !space.is_fixed_by(basepoint, orbit.whole_object()) {
            return Err(Error::Invalid(format!(
                "basepoint `{}` is not G-fixed",
                c.name(basepoint)
            )));
        }
        for (&y, w) in &given {
            let stab = space.stabilizer(y);
            if w.steps.iter().any(|s| !space.is_fixed_by(s.edge, stab)) {
                return Err(Error::Invalid(format!(
                    "path to `{}` leaves the fixed complex of its stabilizer {}",
                    c.name(y),
                    orbit.key(stab)
                )));
            }
            if w.follow(c, basepoint) != Some(y) {
                return Err(Error::Invalid(format!(
                    "path {} does not run from `{}` to `{}`",
                    w.display(c),
                    c.name(basepoint),
                    c.name(y)
                )));
            }
        }
        let mut paths = BTreeMap::new();
        for o in space.orbit_decomposition(0).orbits {
            let anchor = o.members.iter().find(|(y, _)| given.contains_key(y));
            let (anchor, g_anchor, w) = match anchor {
                Some(&(y, g)) => (y, g, given[&y].clone()),
                None => {
                    let w = bfs_path(&space, o.stabilizer, basepoint, o.rep).ok_or_else(|| {
                        Error::Invalid(format!(
                            "`{}` is not connected to the basepoint in X^{}",
                            c.name(o.rep),
                            orbit.key(o.stabilizer)
                        ))
                    })?;
                    (o.rep, orbit.group().identity(), w)
                }
            };
            // Members are `g_y · rep`, the anchor is `g_anchor · rep`.
            let grp = orbit.group();
            let back = grp.inv(g_anchor);
            for &(y, g) in &o.members {
                let t = w.transport(&space, grp.mul(g, back));
                if let Some(u) = given.get(&y) {
                    if *u != t && y != anchor {
                        return Err(Error::Invalid(format!(
                            "path to `{}` disagrees with the transport of the path to `{}`",
                            c.name(y),
                            c.name(anchor)
                        )));
                    }
                }
                paths.insert(y, t);
            }
        }
        Ok(Self {
            space,
            basepoint,
            paths,
        })
    }

    pub fn space(&self) -> &Arc<GSimplicialSet> {
        &self.space
    }

    pub fn basepoint(&self) -> SimplexId {
        self.basepoint
    }

    /// `ω_x`.
    pub fn path(&self, x: SimplexId) -> &EdgeWord {
        &self.paths[&x]
    }

    /// `κ(y) = ξ(y_1)^{-1} ∘ [y_{01}] ∘ ξ(y_0)` as a loop at the basepoint,
    /// where `y_{01}` is the edge on the first two vertices (omitted when degenerate).
    pub fn word(&self, y: &SimplexRef) -> EdgeWord {
        let c = self.space.complex();
        let q = y.dim();
        if q == 0 {
            return EdgeWord::empty();
        }
        let mut edge = y.clone();
        for i in (2..=q).rev() {
            edge = c.face(i, &edge).expect("in range");
        }
        let v0 = c.vertex_of(y, 0).base;
        let v1 = c.vertex_of(y, 1).base;
        let middle = if edge.is_degenerate() {
            EdgeWord::empty()
        } else {
            EdgeWord::single(edge.base, true)
        };
        self.paths[&v0].then(&middle).then(&self.paths[&v1].inverse())
    }

    /// Loops close at the basepoint, and `κ(g y) = g κ(y)` on generators.
    pub fn validate(&self) -> ValidationReport {
        let c = self.space.complex();
        let grp = self.space.orbit_category().group();
        let mut rep = ValidationReport::new("kappa");
        for (&x, w) in &self.paths {
            rep.check(w.follow(c, self.basepoint) == Some(x), "path endpoints", || {
                format!("omega({}) = {}", c.name(x), w.display(c))
            });
            let stab = self.space.stabilizer(x);
            rep.check(
                w.steps.iter().all(|s| self.space.is_fixed_by(s.edge, stab)),
                "path in fixed complex",
                || format!("omega({})", c.name(x)),
            );
        }
        for y in c.all_nondegenerate().filter(|y| y.dim >= 1) {
            let w = self.word(&SimplexRef::nondegenerate(y));
            rep.check(w.follow(c, self.basepoint) == Some(self.basepoint), "loop", || {
                format!("kappa({}) = {}", c.name(y), w.display(c))
            });
            for g in grp.elements() {
                let gy = self.space.act_id(g, y);
                let ok = self.word(&SimplexRef::nondegenerate(gy)) == w.transport(&self.space, g);
                rep.check(ok, "naturality", || format!("{} acting on {}", grp.name(g), c.name(y)));
            }
        }
        rep
    }
}

/// Per orbit type `H`, an automorphism of `M(G/H)` for each nondegenerate edge
/// of `X^H`; edges left out act as the identity.
#[derive(Debug, Clone)]
pub struct EdgeAction {
    space: Arc<GSimplicialSet>,
    module: CoefficientSystem,
    maps: Vec<BTreeMap<SimplexId, AbHom>>,
}

impl EdgeAction {
    pub fn new(
        space: Arc<GSimplicialSet>,
        module: CoefficientSystem,
        maps: Vec<BTreeMap<SimplexId, AbHom>>,
    ) -> Result<Self> {
        let orbit = space.orbit_category().clone();
        if maps.len() != orbit.num_objects() {
            return Err(Error::DimensionMismatch("one edge table per orbit type".into()));
        }
        for (h, table) in maps.iter().enumerate() {
            for (&e, a) in table {
                if e.dim != 1 || !space.is_fixed_by(e, h) {
                    return Err(Error::Invalid(format!(
                        "`{}` is not an edge of X^{}",
                        space.complex().name(e),
                        orbit.key(h)
                    )));
                }
                if a.source() != module.value(h) || a.target() != module.value(h) {
                    return Err(Error::DimensionMismatch(format!(
                        "action of `{}` is not an endomorphism of M({})",
                        space.complex().name(e),
                        orbit.key(h)
                    )));
                }
            }
        }
        Ok(Self { space, module, maps })
    }

    pub fn module(&self) -> &CoefficientSystem {
        &self.module
    }

    /// Action of one edge (forward), identity when unassigned.
    pub fn edge(&self, h: usize, e: SimplexId) -> AbHom {
        self.maps[h]
            .get(&e)
            .cloned()
            .unwrap_or_else(|| AbHom::identity(self.module.value(h)))
    }

    fn edge_ref(&self, h: usize, e: &SimplexRef) -> AbHom {
        if e.is_degenerate() {
            AbHom::identity(self.module.value(h))
        } else {
            self.edge(h, e.base)
        }
    }

    /// The composite automorphism of a word: later steps act after earlier ones.
    pub fn act(&self, h: usize, w: &EdgeWord) -> Result<AbHom> {
        let mut acc = AbHom::identity(self.module.value(h));
        for s in &w.steps {
            let a = self.edge(h, s.edge);
            let a = if s.forward {
                a
            } else {
                a.inverse().ok_or_else(|| {
                    Error::Invalid(format!(
                        "action of `{}` is not invertible",
                        self.space.complex().name(s.edge)
                    ))
                })?
            };
            acc = a.after(&acc)?;
        }
        Ok(acc)
    }

    /// Automorphisms, the 2-simplex rule `A(∂_1σ) = A(∂_0σ) A(∂_2σ)` on
    /// every `X^H`, and `A_H(g e) M(ĝ) = M(ĝ) A_K(e)`.
    pub fn validate(&self) -> ValidationReport {
        let c = self.space.complex();
        let orbit = self.space.orbit_category().clone();
        let mut rep = ValidationReport::new("edge action");
        for h in orbit.objects() {
            for (&e, a) in &self.maps[h] {
                rep.check(a.is_iso(), "automorphism", || {
                    format!("{} at {}", c.name(e), orbit.key(h))
                });
            }
            for s in c.nondegenerate(2).filter(|&s| self.space.is_fixed_by(s, h)) {
                let f = c.stored_faces(s);
                let lhs = self.edge_ref(h, &f[1]);
                let rhs = self.edge_ref(h, &f[0]).after(&self.edge_ref(h, &f[2]));
                let ok = matches!(rhs, Ok(r) if r.equals(&lhs));
                rep.check(ok, "2-simplex rule", || format!("{} in X^{}", c.name(s), orbit.key(h)));
            }
        }
        for f in orbit.morphisms() {
            let m = self.module.map(&f);
            for e in c.nondegenerate(1).filter(|&e| self.space.is_fixed_by(e, f.target)) {
                let ge = self.space.act_id(f.rep, e);
                let lhs = self.edge(f.source, ge).after(m);
                let rhs = m.after(&self.edge(f.target, e));
                let ok = matches!((lhs, rhs), (Ok(a), Ok(b)) if a.equals(&b));
                rep.check(ok, "naturality", || {
                    format!("{} on {}", orbit.morphism_key(&f), c.name(e))
                });
            }
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::{FiniteGroup, OrbitCategory};

    fn triangle() -> FiniteSimplicialSet {
        let mut x = FiniteSimplicialSet::new(3);
        let v: Vec<SimplexRef> = ["0", "1", "2"]
            .iter()
            .map(|n| SimplexRef::nondegenerate(x.add_simplex(n, vec![]).unwrap()))
            .collect();
        x.add_simplex("e01", vec![v[1].clone(), v[0].clone()]).unwrap();
        x.add_simplex("e12", vec![v[2].clone(), v[1].clone()]).unwrap();
        x.add_simplex("e02", vec![v[2].clone(), v[0].clone()]).unwrap();
        x
    }

    #[test]
    fn triangle_loop() {
        let x = triangle();
        let (e01, e12, e02) = (x.get("e01").unwrap(), x.get("e12").unwrap(), x.get("e02").unwrap());
        let o = Arc::new(OrbitCategory::new(FiniteGroup::trivial()));
        let gx = Arc::new(GSimplicialSet::trivial_action(x, o).unwrap());
        let c = gx.complex();
        let given = BTreeMap::from([
            (c.get("1").unwrap(), EdgeWord::single(e01, true)),
            (c.get("2").unwrap(), EdgeWord::single(e02, true)),
        ]);
        let k = Kappa::new(gx.clone(), c.get("0").unwrap(), given).unwrap();
        let w = k.word(&SimplexRef::nondegenerate(e12));
        assert_eq!(w.display(c), "(e01,+)(e12,+)(e02,-)");
        assert!(k.word(&SimplexRef::nondegenerate(e01)).is_empty());
        assert!(k.validate().is_ok());
    }
}
