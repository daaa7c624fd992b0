//! Twisted cartesian products `F ×_τ B`.

use std::fmt;

use crate::error::{Error, Result};
use crate::orbit::FiniteGroup;
use crate::report::ValidationReport;
use crate::simplicial::{FiniteLevels, SimplicialObject};
use crate::twisting::function::validate_twisting_identities;

type Action<F> = Box<dyn Fn(usize, &F) -> F + Send + Sync>;
type Tau<B> = Box<dyn Fn(&B) -> usize + Send + Sync>;

/// `F ×_τ B` for a left action of a finite group `π` on `F` by simplicial maps
/// and a function `τ: B_q → π` on simplices of positive dimension.
///
/// `∂_0(f, b) = (τ(b) · ∂_0 f, ∂_0 b)`; every other face and every degeneracy
/// acts componentwise.
pub struct TwistedProduct<F: SimplicialObject, B: SimplicialObject> {
    fiber: F,
    base: B,
    group: FiniteGroup,
    act: Action<F::Simplex>,
    tau: Tau<B::Simplex>,
}

impl<F: SimplicialObject, B: SimplicialObject> fmt::Debug for TwistedProduct<F, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwistedProduct(group of order {})", self.group.order())
    }
}

impl<F: FiniteLevels, B: FiniteLevels> TwistedProduct<F, B> {
    /// Builds the product after checking the twisting identities of `τ` and the
    /// action on `F` through level `q_max`.
    pub fn new(
        fiber: F,
        base: B,
        group: FiniteGroup,
        act: impl Fn(usize, &F::Simplex) -> F::Simplex + Send + Sync + 'static,
        tau: impl Fn(&B::Simplex) -> usize + Send + Sync + 'static,
        q_max: usize,
    ) -> Result<Self> {
        let tcp = Self::unchecked(fiber, base, group, act, tau);
        let mut rep = validate_twisting_identities(&tcp.base, &tcp.group, |b| (tcp.tau)(b), q_max, "tau")?;
        rep.merge(tcp.validate_action(q_max)?);
        if !rep.is_ok() {
            return Err(Error::Invalid(format!("twisted product rejected: {rep}")));
        }
        Ok(tcp)
    }
}

impl<F: SimplicialObject, B: SimplicialObject> TwistedProduct<F, B> {
    /// Builds the product without checking `τ`, so that its failure to be
    /// simplicial can be observed.
    pub fn unchecked(
        fiber: F,
        base: B,
        group: FiniteGroup,
        act: impl Fn(usize, &F::Simplex) -> F::Simplex + Send + Sync + 'static,
        tau: impl Fn(&B::Simplex) -> usize + Send + Sync + 'static,
    ) -> Self {
        Self {
            fiber,
            base,
            group,
            act: Box::new(act),
            tau: Box::new(tau),
        }
    }

    pub fn fiber(&self) -> &F {
        &self.fiber
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn act(&self, u: usize, f: &F::Simplex) -> F::Simplex {
        (self.act)(u, f)
    }

    pub fn tau(&self, b: &B::Simplex) -> usize {
        (self.tau)(b)
    }

    /// The projection onto the base.
    pub fn project(&self, x: &(F::Simplex, B::Simplex)) -> B::Simplex {
        x.1.clone()
    }
}

impl<F: FiniteLevels, B: FiniteLevels> TwistedProduct<F, B> {
    /// `e` acts trivially, `(uv)·f = u·(v·f)`, and each `u` commutes with faces
    /// and degeneracies of `F`.
    pub fn validate_action(&self, q_max: usize) -> Result<ValidationReport> {
        let mut rep = ValidationReport::new("fiber action");
        let g = &self.group;
        for q in 0..=q_max {
            for f in self.fiber.simplices(q)? {
                rep.check(self.act(g.identity(), &f) == f, "unit", || self.fiber.label(&f));
                for u in g.elements() {
                    let uf = self.act(u, &f);
                    for v in g.elements() {
                        let ok = self.act(g.mul(u, v), &f) == self.act(u, &self.act(v, &f));
                        rep.check(ok, "associativity", || {
                            format!("{} {} on {}", g.name(u), g.name(v), self.fiber.label(&f))
                        });
                    }
                    for i in 0..=q {
                        if q >= 1 {
                            let ok = self.fiber.face(i, &uf) == self.act(u, &self.fiber.face(i, &f));
                            rep.check(ok, "action commutes with faces", || {
                                format!("{} on {}", g.name(u), self.fiber.label(&f))
                            });
                        }
                        if q < q_max {
                            let ok = self.fiber.degeneracy(i, &uf) == self.act(u, &self.fiber.degeneracy(i, &f));
                            rep.check(ok, "action commutes with degeneracies", || {
                                format!("{} on {}", g.name(u), self.fiber.label(&f))
                            });
                        }
                    }
                }
            }
        }
        Ok(rep)
    }
}

impl<F: SimplicialObject, B: SimplicialObject> SimplicialObject for TwistedProduct<F, B> {
    type Simplex = (F::Simplex, B::Simplex);

    fn dim(&self, x: &Self::Simplex) -> usize {
        self.base.dim(&x.1)
    }

    fn face(&self, i: usize, x: &Self::Simplex) -> Self::Simplex {
        let f = self.fiber.face(i, &x.0);
        let b = self.base.face(i, &x.1);
        if i == 0 {
            ((self.act)((self.tau)(&x.1), &f), b)
        } else {
            (f, b)
        }
    }

    fn degeneracy(&self, j: usize, x: &Self::Simplex) -> Self::Simplex {
        (self.fiber.degeneracy(j, &x.0), self.base.degeneracy(j, &x.1))
    }

    fn label(&self, x: &Self::Simplex) -> String {
        format!("({}, {})", self.fiber.label(&x.0), self.base.label(&x.1))
    }
}

impl<F: FiniteLevels, B: FiniteLevels> FiniteLevels for TwistedProduct<F, B> {
    fn simplices(&self, q: usize) -> Result<Vec<Self::Simplex>> {
        let fs = self.fiber.simplices(q)?;
        let bs = self.base.simplices(q)?;
        let mut out = Vec::with_capacity(fs.len() * bs.len());
        for f in &fs {
            for b in &bs {
                out.push((f.clone(), b.clone()));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{validate_levelwise, FiniteSimplicialSet, SimplexRef};

    fn circle() -> FiniteSimplicialSet {
        let mut x = FiniteSimplicialSet::new(3);
        let v = SimplexRef::nondegenerate(x.add_simplex("v", vec![]).unwrap());
        x.add_simplex("e", vec![v.clone(), v]).unwrap();
        x
    }

    #[test]
    fn universal_bundle_over_circle_is_simplicial() {
        // π = Z/2 acting on itself (a discrete fiber) by translation.
        let base = circle();
        let e = base.get("e").unwrap();
        let g = FiniteGroup::cyclic(2);
        let fiber_group = g.clone();
        let tcp = TwistedProduct::new(
            Discrete(FiniteGroup::cyclic(2)),
            base,
            g,
            move |u, f: &(usize, usize)| (fiber_group.mul(u, f.0), f.1),
            move |b: &SimplexRef| if b.word.contains(0) || b.base != e { 0 } else { 1 },
            3,
        )
        .unwrap();
        assert!(validate_levelwise(&tcp, 3, "Z/2 x_tau S1").unwrap().is_ok());
    }

    /// A group viewed as a discrete simplicial set: simplices `(element, dim)`.
    struct Discrete(FiniteGroup);

    impl SimplicialObject for Discrete {
        type Simplex = (usize, usize);
        fn dim(&self, x: &(usize, usize)) -> usize {
            x.1
        }
        fn face(&self, _: usize, x: &(usize, usize)) -> (usize, usize) {
            (x.0, x.1 - 1)
        }
        fn degeneracy(&self, _: usize, x: &(usize, usize)) -> (usize, usize) {
            (x.0, x.1 + 1)
        }
    }

    impl FiniteLevels for Discrete {
        fn simplices(&self, q: usize) -> Result<Vec<(usize, usize)>> {
            Ok(self.0.elements().map(|u| (u, q)).collect())
        }
    }
}
