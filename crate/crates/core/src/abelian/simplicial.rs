//! Simplicial abelian groups truncated at a top level, and their homotopy
//! groups via the normalized Moore complex.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::coefficients::CoefficientSystem;
use super::group::{AbHom, FgAbGroup};
use super::lattice::Lattice;
use super::matrix::IntMatrix;
use crate::error::{Error, Result};
use crate::orbit::{OrbitCategory, OrbitMorphism};
use crate::report::ValidationReport;

/// Levels `0..=top` with `faces[p][i]: Γ_p → Γ_{p−1}` and
/// `degeneracies[p][j]: Γ_p → Γ_{p+1}` (the latter for `p < top`).
#[derive(Debug, Clone)]
pub struct SimplicialAbGroup {
    levels: Vec<FgAbGroup>,
    faces: Vec<Vec<AbHom>>,
    degeneracies: Vec<Vec<AbHom>>,
}

impl SimplicialAbGroup {
    pub fn new(levels: Vec<FgAbGroup>, faces: Vec<Vec<AbHom>>, degeneracies: Vec<Vec<AbHom>>) -> Result<Self> {
        let top = levels
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::DimensionMismatch("a simplicial group needs level 0".into()))?;
        let shape_ok = faces.len() == top + 1
            && degeneracies.len() == top + 1
            && faces
                .iter()
                .enumerate()
                .all(|(p, f)| f.len() == if p == 0 { 0 } else { p + 1 })
            && degeneracies
                .iter()
                .enumerate()
                .all(|(p, s)| s.len() == if p < top { p + 1 } else { 0 });
        if !shape_ok {
            return Err(Error::DimensionMismatch(
                "face/degeneracy lists do not match the levels".into(),
            ));
        }
        Ok(Self {
            levels,
            faces,
            degeneracies,
        })
    }

    /// The constant simplicial group on `a`.
    pub fn constant(a: &FgAbGroup, top: usize) -> Self {
        let id = AbHom::identity(a);
        Self {
            levels: vec![a.clone(); top + 1],
            faces: (0..=top)
                .map(|p| vec![id.clone(); if p == 0 { 0 } else { p + 1 }])
                .collect(),
            degeneracies: (0..=top)
                .map(|p| vec![id.clone(); if p < top { p + 1 } else { 0 }])
                .collect(),
        }
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, p: usize) -> &FgAbGroup {
        &self.levels[p]
    }

    pub fn face(&self, p: usize, i: usize) -> &AbHom {
        &self.faces[p][i]
    }

    pub fn degeneracy(&self, p: usize, j: usize) -> &AbHom {
        &self.degeneracies[p][j]
    }

    /// All five families of simplicial identities, as equalities of homomorphisms.
    pub fn validate(&self, subject: &str) -> ValidationReport {
        let mut rep = ValidationReport::new(subject);
        let top = self.top();
        let eq = |a: Result<AbHom>, b: Result<AbHom>| match (a, b) {
            (Ok(a), Ok(b)) => a.equals(&b),
            _ => false,
        };
        for p in 2..=top {
            for j in 1..=p {
                for i in 0..j {
                    let lhs = self.faces[p - 1][i].after(&self.faces[p][j]);
                    let rhs = self.faces[p - 1][j - 1].after(&self.faces[p][i]);
                    rep.check(eq(lhs, rhs), "face-face", || format!("d{i} d{j} at level {p}"));
                }
            }
        }
        for p in 0..top {
            for j in 0..=p {
                let s = &self.degeneracies[p][j];
                for i in 0..=p + 1 {
                    let lhs = self.faces[p + 1][i].after(s);
                    let ok = if i == j || i == j + 1 {
                        eq(lhs, Ok(AbHom::identity(&self.levels[p])))
                    } else if i < j {
                        eq(lhs, self.degeneracies[p - 1][j - 1].after(&self.faces[p][i]))
                    } else {
                        eq(lhs, self.degeneracies[p - 1][j].after(&self.faces[p][i - 1]))
                    };
                    rep.check(ok, "face-degeneracy", || format!("d{i} s{j} at level {p}"));
                }
                if p + 2 <= top {
                    for i in 0..=j {
                        let lhs = self.degeneracies[p + 1][i].after(s);
                        let rhs = self.degeneracies[p + 1][j + 1].after(&self.degeneracies[p][i]);
                        rep.check(eq(lhs, rhs), "degeneracy-degeneracy", || {
                            format!("s{i} s{j} at level {p}")
                        });
                    }
                }
            }
        }
        rep
    }

    /// Normalized chains `N_p = ∩_{i≥1} ker ∂_i` as a lattice in `ℤ^{gens of Γ_p}`.
    pub fn normalized_lattice(&self, p: usize) -> Lattice {
        let mut l = Lattice::full(self.levels[p].n_gens());
        for i in 1..=p {
            l = l.intersection(&self.faces[p][i].kernel_lattice());
        }
        l
    }

    /// `π_n = H_n(N, ∂_0)`; requires level `n + 1`.
    pub fn moore_homotopy(&self, n: usize) -> Result<FgAbGroup> {
        if n + 1 > self.top() {
            return Err(Error::InsufficientTruncation(format!(
                "pi_{n} needs level {} but the top level is {}",
                n + 1,
                self.top()
            )));
        }
        let mut cycles = self.normalized_lattice(n);
        if n > 0 {
            cycles = cycles.intersection(&self.faces[n][0].kernel_lattice());
        }
        let above = self.normalized_lattice(n + 1);
        let boundaries = above
            .image(self.faces[n + 1][0].matrix())
            .sum(self.levels[n].relation_lattice());
        FgAbGroup::subquotient(&cycles, &boundaries)
    }

    /// Levelwise kernel of a simplicial homomorphism `maps[p]: Γ_p → B_p`.
    ///
    /// Generators of each kernel level are the basis of the kernel lattice;
    /// `inclusions[p]` records them as columns.
    pub fn kernel(&self, maps: &[AbHom]) -> Result<(SimplicialAbGroup, Vec<IntMatrix>)> {
        if maps.len() != self.levels.len() {
            return Err(Error::DimensionMismatch("one map per level".into()));
        }
        let lattices: Vec<Lattice> = maps.iter().map(AbHom::kernel_lattice).collect();
        let levels: Vec<FgAbGroup> = lattices
            .iter()
            .zip(&self.levels)
            .map(|(l, g)| FgAbGroup::subquotient(l, g.relation_lattice()))
            .collect::<Result<_>>()?;
        let restrict = |m: &AbHom, from: usize, to: usize| -> Result<AbHom> {
            let basis = lattices[from].basis();
            let image = m.matrix().mul(basis);
            let mut cols = Vec::with_capacity(image.cols());
            for j in 0..image.cols() {
                cols.push(
                    lattices[to]
                        .coordinates(&image.column(j))
                        .ok_or_else(|| Error::Invalid("structure map does not preserve the kernel".into()))?,
                );
            }
            AbHom::new(
                levels[from].clone(),
                levels[to].clone(),
                IntMatrix::from_columns(lattices[to].rank(), &cols),
            )
        };
        let top = self.top();
        let mut faces = Vec::with_capacity(top + 1);
        let mut degens = Vec::with_capacity(top + 1);
        for p in 0..=top {
            faces.push(
                self.faces[p]
                    .iter()
                    .map(|f| restrict(f, p, p - 1))
                    .collect::<Result<Vec<_>>>()?,
            );
            degens.push(
                self.degeneracies[p]
                    .iter()
                    .map(|s| restrict(s, p, p + 1))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let inclusions = lattices.iter().map(|l| l.basis().clone()).collect();
        Ok((SimplicialAbGroup::new(levels, faces, degens)?, inclusions))
    }
}

/// A contravariant functor from `O_G` to truncated simplicial abelian groups:
/// `maps[ĝ][p]: Γ(G/K)_p → Γ(G/H)_p` for `ĝ: G/H → G/K`.
#[derive(Debug, Clone)]
pub struct OGSimplicialAbGroup {
    orbit: Arc<OrbitCategory>,
    values: Vec<SimplicialAbGroup>,
    maps: BTreeMap<OrbitMorphism, Vec<AbHom>>,
}

impl OGSimplicialAbGroup {
    /// Absent identity morphisms default to identity maps; every other
    /// morphism must be present.
    pub fn new(
        orbit: Arc<OrbitCategory>,
        values: Vec<SimplicialAbGroup>,
        mut maps: BTreeMap<OrbitMorphism, Vec<AbHom>>,
    ) -> Result<Self> {
        if values.len() != orbit.num_objects() {
            return Err(Error::DimensionMismatch("one simplicial group per orbit type".into()));
        }
        let top = values[0].top();
        if values.iter().any(|v| v.top() != top) {
            return Err(Error::DimensionMismatch("values truncated at different levels".into()));
        }
        for f in orbit.morphisms() {
            match maps.get(&f) {
                Some(m) => {
                    let ok = m.len() == top + 1
                        && m.iter().enumerate().all(|(p, a)| {
                            a.source() == values[f.target].level(p) && a.target() == values[f.source].level(p)
                        });
                    if !ok {
                        return Err(Error::DimensionMismatch(format!(
                            "structure map at {} has the wrong shape",
                            orbit.morphism_key(&f)
                        )));
                    }
                }
                None if orbit.is_identity(&f) => {
                    let ids = (0..=top).map(|p| AbHom::identity(values[f.source].level(p))).collect();
                    maps.insert(f, ids);
                }
                None => {
                    return Err(Error::Invalid(format!(
                        "missing structure map at {}",
                        orbit.morphism_key(&f)
                    )))
                }
            }
        }
        Ok(Self { orbit, values, maps })
    }

    /// Each `M(G/H)` as a constant simplicial group.
    pub fn constant(m: &CoefficientSystem, top: usize) -> Self {
        let orbit = m.orbit_category().clone();
        let values = orbit
            .objects()
            .map(|h| SimplicialAbGroup::constant(m.value(h), top))
            .collect();
        let maps = orbit
            .morphisms()
            .into_iter()
            .map(|f| {
                let a = m.map(&f).clone();
                (f, vec![a; top + 1])
            })
            .collect();
        Self { orbit, values, maps }
    }

    pub fn orbit_category(&self) -> &Arc<OrbitCategory> {
        &self.orbit
    }

    pub fn top(&self) -> usize {
        self.values[0].top()
    }

    pub fn value(&self, h: usize) -> &SimplicialAbGroup {
        &self.values[h]
    }

    pub fn map(&self, f: &OrbitMorphism, p: usize) -> &AbHom {
        &self.maps[f][p]
    }

    /// Simplicial identities at each orbit type, structure maps simplicial,
    /// and functoriality `Γ(h ∘ f) = Γ(f) Γ(h)` levelwise.
    pub fn validate(&self, subject: &str) -> ValidationReport {
        let mut rep = ValidationReport::new(subject);
        let top = self.top();
        for h in self.orbit.objects() {
            let r = self.values[h].validate(&self.orbit.key(h));
            for mut v in r.violations {
                v.witness = format!("at {}: {}", self.orbit.key(h), v.witness);
                rep.violations.push(v);
            }
            rep.checks += r.checks;
        }
        let eq = |a: Result<AbHom>, b: Result<AbHom>| matches!((a, b), (Ok(a), Ok(b)) if a.equals(&b));
        let morphisms = self.orbit.morphisms();
        for f in &morphisms {
            let (src, tgt) = (&self.values[f.target], &self.values[f.source]);
            let key = self.orbit.morphism_key(f);
            for p in 0..=top {
                let m = &self.maps[f][p];
                for i in 0..=p {
                    if p >= 1 {
                        let ok = eq(tgt.face(p, i).after(m), self.maps[f][p - 1].after(src.face(p, i)));
                        rep.check(ok, "structure map commutes with faces", || {
                            format!("{key}, d{i} at level {p}")
                        });
                    }
                    if p < top {
                        let ok = eq(
                            tgt.degeneracy(p, i).after(m),
                            self.maps[f][p + 1].after(src.degeneracy(p, i)),
                        );
                        rep.check(ok, "structure map commutes with degeneracies", || {
                            format!("{key}, s{i} at level {p}")
                        });
                    }
                }
                if self.orbit.is_identity(f) {
                    rep.check(m.equals(&AbHom::identity(src.level(p))), "identity", || {
                        format!("{key} at level {p}")
                    });
                }
            }
        }
        for f in &morphisms {
            for g in morphisms.iter().filter(|g| g.source == f.target) {
                let Ok(gf) = self.orbit.compose(f, g) else {
                    rep.fail(
                        "functoriality",
                        format!("cannot compose at {}", self.orbit.morphism_key(f)),
                    );
                    continue;
                };
                for p in 0..=top {
                    let ok = eq(Ok(self.maps[&gf][p].clone()), self.maps[f][p].after(&self.maps[g][p]));
                    rep.check(ok, "functoriality", || {
                        format!(
                            "{} then {} at level {p}",
                            self.orbit.morphism_key(f),
                            self.orbit.morphism_key(g)
                        )
                    });
                }
            }
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::group::NormalForm;

    #[test]
    fn constant_group_homotopy() {
        let a = FgAbGroup::cyclic(4);
        let c = SimplicialAbGroup::constant(&a, 3);
        assert!(c.validate("constant").is_ok());
        assert_eq!(c.moore_homotopy(0).unwrap().normal_form(), &NormalForm::new(0, &[4]));
        assert!(c.moore_homotopy(1).unwrap().is_trivial());
        assert!(c.moore_homotopy(2).unwrap().is_trivial());
        assert!(matches!(c.moore_homotopy(3), Err(Error::InsufficientTruncation(_))));
    }
}
