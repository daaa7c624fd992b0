//! The classifying complex `W̄π` of a finite group and its O_G version.

use std::sync::Arc;

use crate::abelian::OGGroup;
use crate::error::{Error, Result};
use crate::orbit::{FiniteGroup, OrbitMorphism};
use crate::report::ValidationReport;
use crate::simplicial::{validate_levelwise, FiniteLevels, SimplicialObject};

/// `W̄π` with `q`-simplices the tuples `[x_1, …, x_q]` of group elements.
///
/// Faces: `∂_0` drops `x_1`, `∂_i` replaces `x_i, x_{i+1}` by `x_{i+1} x_i`
/// for `0 < i < q`, `∂_q` drops `x_q`. The degeneracy `s_i` inserts `e` in
/// front of `x_{i+1}`.
#[derive(Debug, Clone)]
pub struct WBar {
    group: FiniteGroup,
    budget: usize,
}

impl WBar {
    pub fn new(group: FiniteGroup) -> Self {
        Self { group, budget: 1 << 20 }
    }

    /// Caps the number of simplices `simplices(q)` may list.
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The canonical twisting function `[x_1, …, x_q] ↦ x_1`.
    pub fn tau(&self, x: &[usize]) -> usize {
        x.first().copied().unwrap_or_else(|| self.group.identity())
    }

    /// Parses names separated by commas, e.g. `"a,e"`.
    pub fn parse(&self, text: &str) -> Result<Vec<usize>> {
        let text = text.trim().trim_start_matches('[').trim_end_matches(']');
        if text.trim().is_empty() {
            return Ok(Vec::new());
        }
        text.split(',').map(|s| self.group.element(s.trim())).collect()
    }
}

impl SimplicialObject for WBar {
    type Simplex = Vec<usize>;

    fn dim(&self, x: &Vec<usize>) -> usize {
        x.len()
    }

    fn face(&self, i: usize, x: &Vec<usize>) -> Vec<usize> {
        let q = x.len();
        assert!(q >= 1 && i <= q, "face d{i} of a {q}-simplex");
        let mut out = Vec::with_capacity(q - 1);
        if i == 0 {
            out.extend_from_slice(&x[1..]);
        } else if i == q {
            out.extend_from_slice(&x[..q - 1]);
        } else {
            out.extend_from_slice(&x[..i - 1]);
            out.push(self.group.mul(x[i], x[i - 1]));
            out.extend_from_slice(&x[i + 1..]);
        }
        out
    }

    fn degeneracy(&self, j: usize, x: &Vec<usize>) -> Vec<usize> {
        assert!(j <= x.len(), "degeneracy s{j} of a {}-simplex", x.len());
        let mut out = x.clone();
        out.insert(j, self.group.identity());
        out
    }

    fn label(&self, x: &Vec<usize>) -> String {
        let names: Vec<&str> = x.iter().map(|&u| self.group.name(u)).collect();
        format!("[{}]", names.join(","))
    }
}

impl FiniteLevels for WBar {
    fn simplices(&self, q: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.group.order();
        let count = (n as u128).checked_pow(q as u32).unwrap_or(u128::MAX);
        if count > self.budget as u128 {
            return Err(Error::Budget(format!(
                "W-bar level {q} has {count} simplices, budget {}",
                self.budget
            )));
        }
        let mut out = vec![Vec::new()];
        for _ in 0..q {
            out = out
                .into_iter()
                .flat_map(|t: Vec<usize>| {
                    (0..n).map(move |u| {
                        let mut t = t.clone();
                        t.push(u);
                        t
                    })
                })
                .collect();
        }
        Ok(out)
    }
}

/// `W̄π` for an O_G-group `π`: one complex per orbit type, with structure maps
/// `π(ĝ)` applied coordinatewise.
#[derive(Debug, Clone)]
pub struct OGWBar {
    pi: OGGroup,
    levels: Vec<WBar>,
}

impl OGWBar {
    pub fn new(pi: OGGroup) -> Self {
        let n = pi.orbit_category().num_objects();
        let levels = (0..n).map(|h| WBar::new(pi.value(h).clone())).collect();
        Self { pi, levels }
    }

    pub fn pi(&self) -> &OGGroup {
        &self.pi
    }

    pub fn at(&self, h: usize) -> &WBar {
        &self.levels[h]
    }

    /// `W̄π(ĝ): W̄π(G/K) → W̄π(G/H)` for `ĝ: G/H → G/K`.
    pub fn map(&self, f: &OrbitMorphism, x: &[usize]) -> Vec<usize> {
        x.iter().map(|&u| self.pi.map(f, u)).collect()
    }

    /// Simplicial identities at each orbit type, and that each structure map
    /// commutes with faces and degeneracies.
    pub fn validate(&self, q_max: usize) -> Result<ValidationReport> {
        let orbit: Arc<_> = self.pi.orbit_category().clone();
        let mut rep = ValidationReport::new("O_G W-bar");
        for h in orbit.objects() {
            rep.merge(validate_levelwise(&self.levels[h], q_max, &orbit.key(h))?);
        }
        for f in orbit.morphisms() {
            let (src, tgt) = (&self.levels[f.target], &self.levels[f.source]);
            for q in 0..=q_max {
                for x in src.simplices(q)? {
                    let fx = self.map(&f, &x);
                    for i in 0..=q {
                        if q >= 1 {
                            let ok = tgt.face(i, &fx) == self.map(&f, &src.face(i, &x));
                            rep.check(ok, "structure map commutes with faces", || {
                                format!("{} at {}", orbit.morphism_key(&f), src.label(&x))
                            });
                        }
                        if q < q_max {
                            let ok = tgt.degeneracy(i, &fx) == self.map(&f, &src.degeneracy(i, &x));
                            rep.check(ok, "structure map commutes with degeneracies", || {
                                format!("{} at {}", orbit.morphism_key(&f), src.label(&x))
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
    use crate::twisting::function::validate_twisting_identities;

    #[test]
    fn level_sizes_and_identities() {
        let w = WBar::new(FiniteGroup::cyclic(2));
        for q in 0..5 {
            assert_eq!(w.simplices(q).unwrap().len(), 1 << q);
        }
        assert!(validate_levelwise(&w, 4, "W(Z/2)").unwrap().is_ok());
    }

    #[test]
    fn canonical_tau_on_nonabelian_group() {
        let w = WBar::new(FiniteGroup::symmetric3());
        assert!(validate_levelwise(&w, 3, "W(S3)").unwrap().is_ok());
        let rep = validate_twisting_identities(&w, w.group(), |x| w.tau(x), 3, "tau").unwrap();
        assert!(rep.is_ok(), "{rep}");
    }

    #[test]
    fn budget_is_enforced() {
        let w = WBar::new(FiniteGroup::cyclic(4)).with_budget(10);
        assert!(matches!(w.simplices(2), Err(Error::Budget(_))));
    }
}
