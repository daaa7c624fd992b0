//! Simplicial maps out of finite simplicial sets.

use super::complex::{FiniteSimplicialSet, SimplexId, SimplexRef};
use super::levelwise::{FiniteLevels, SimplicialObject};
use super::standard::standard_simplex;
use super::word::combinations;
use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// A map out of a [`FiniteSimplicialSet`], stored by its values on
/// nondegenerate generators; `values[n][i]` is the image of generator `(n, i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplicialMap<S = SimplexRef> {
    values: Vec<Vec<S>>,
}

impl<S: Clone> SimplicialMap<S> {
    pub fn new(source: &FiniteSimplicialSet, values: Vec<Vec<S>>) -> Result<Self> {
        let ok = values.len() == source.truncation() + 1
            && values
                .iter()
                .enumerate()
                .all(|(n, v)| v.len() == source.num_nondegenerate(n));
        if !ok {
            return Err(Error::DimensionMismatch(
                "map values do not match the source generators".into(),
            ));
        }
        Ok(Self { values })
    }

    pub fn from_fn(source: &FiniteSimplicialSet, mut f: impl FnMut(SimplexId) -> S) -> Self {
        let values = (0..=source.truncation())
            .map(|n| source.nondegenerate(n).map(&mut f).collect())
            .collect();
        Self { values }
    }

    pub fn value(&self, id: SimplexId) -> &S {
        &self.values[id.dim][id.index]
    }

    pub fn values(&self) -> &[Vec<S>] {
        &self.values
    }
}

/// Image of an arbitrary simplex: degeneracies of the generator's value.
pub fn evaluate<T: SimplicialObject>(map: &SimplicialMap<T::Simplex>, target: &T, x: &SimplexRef) -> T::Simplex {
    let mut y = map.value(x.base).clone();
    for &j in x.word.indices().iter().rev() {
        y = target.degeneracy(j, &y);
    }
    y
}

/// Checks dimensions and that the map commutes with every face of every generator.
/// Compatibility with degeneracies holds by [`evaluate`].
pub fn validate_map<T: SimplicialObject>(
    source: &FiniteSimplicialSet,
    target: &T,
    map: &SimplicialMap<T::Simplex>,
) -> ValidationReport {
    let mut rep = ValidationReport::new("simplicial map");
    for id in source.all_nondegenerate() {
        let y = map.value(id);
        rep.check(target.dim(y) == id.dim, "dimension", || {
            format!("{} sent to {}", source.name(id), target.label(y))
        });
        if id.dim == 0 || target.dim(y) != id.dim {
            continue;
        }
        for (i, f) in source.stored_faces(id).iter().enumerate() {
            let lhs = target.face(i, y);
            let rhs = evaluate(map, target, f);
            rep.check(lhs == rhs, "commutes with faces", || {
                format!(
                    "d{i} f({}) = {} but f(d{i} {}) = {}",
                    source.name(id),
                    target.label(&lhs),
                    source.name(id),
                    target.label(&rhs)
                )
            });
        }
    }
    rep
}

/// All simplicial maps `source → target` on generators of dimension `≤ dim_bound`.
///
/// Backtracks over generators in dimension order; `budget` bounds the number of
/// candidate values examined.
pub fn enumerate_simplicial_maps<T: FiniteLevels>(
    source: &FiniteSimplicialSet,
    target: &T,
    dim_bound: usize,
    budget: usize,
) -> Result<Vec<SimplicialMap<T::Simplex>>> {
    let top = dim_bound.min(source.truncation());
    let gens: Vec<SimplexId> = (0..=top).flat_map(|n| source.nondegenerate(n)).collect();
    let levels: Vec<Vec<T::Simplex>> = (0..=top).map(|q| target.simplices(q)).collect::<Result<_>>()?;
    let mut values: Vec<Vec<Option<T::Simplex>>> = (0..=source.truncation())
        .map(|n| vec![None; source.num_nondegenerate(n)])
        .collect();
    let mut out = Vec::new();
    let mut spent = 0usize;

    struct Search<'a, T: FiniteLevels> {
        source: &'a FiniteSimplicialSet,
        target: &'a T,
        gens: &'a [SimplexId],
        levels: &'a [Vec<T::Simplex>],
        budget: usize,
    }

    fn value_of<T: FiniteLevels>(target: &T, values: &[Vec<Option<T::Simplex>>], x: &SimplexRef) -> T::Simplex {
        let mut y = values[x.base.dim][x.base.index]
            .clone()
            .expect("faces are assigned before their cofaces");
        for &j in x.word.indices().iter().rev() {
            y = target.degeneracy(j, &y);
        }
        y
    }

    fn go<T: FiniteLevels>(
        s: &Search<'_, T>,
        k: usize,
        values: &mut Vec<Vec<Option<T::Simplex>>>,
        spent: &mut usize,
        out: &mut Vec<SimplicialMap<T::Simplex>>,
    ) -> Result<()> {
        if k == s.gens.len() {
            let vals = values
                .iter()
                .map(|lvl| lvl.iter().map(|v| v.clone().expect("assigned")).collect())
                .collect();
            out.push(SimplicialMap { values: vals });
            return Ok(());
        }
        let id = s.gens[k];
        let wanted: Vec<T::Simplex> = if id.dim == 0 {
            Vec::new()
        } else {
            s.source
                .stored_faces(id)
                .iter()
                .map(|f| value_of(s.target, values, f))
                .collect()
        };
        for cand in &s.levels[id.dim] {
            *spent += 1;
            if *spent > s.budget {
                return Err(Error::Budget(format!(
                    "map enumeration examined more than {} candidates",
                    s.budget
                )));
            }
            let fits = wanted.iter().enumerate().all(|(i, w)| &s.target.face(i, cand) == w);
            if fits {
                values[id.dim][id.index] = Some(cand.clone());
                go(s, k + 1, values, spent, out)?;
            }
        }
        values[id.dim][id.index] = None;
        Ok(())
    }

    if top < source.truncation() {
        for n in top + 1..=source.truncation() {
            if source.num_nondegenerate(n) > 0 {
                return Err(Error::InsufficientTruncation(format!(
                    "source has generators in dimension {n} above the bound {dim_bound}"
                )));
            }
        }
    }
    let s = Search {
        source,
        target,
        gens: &gens,
        levels: &levels,
        budget,
    };
    go(&s, 0, &mut values, &mut spent, &mut out)?;
    Ok(out)
}

/// The map `Δ[q] → target` sending `Δ_q` to `y` (so a tuple `(a_0 < … < a_k)`
/// goes to the face of `y` spanned by those vertices).
pub fn map_of_simplex<T: SimplicialObject>(
    target: &T,
    y: &T::Simplex,
) -> (FiniteSimplicialSet, SimplicialMap<T::Simplex>) {
    let q = target.dim(y);
    let delta = standard_simplex(q);
    let mut values = Vec::with_capacity(q + 1);
    for k in 0..=q {
        let mut level = Vec::new();
        for tuple in combinations(q + 1, k + 1) {
            let mut z = y.clone();
            for i in (0..=q).rev() {
                if !tuple.contains(&i) {
                    z = target.face(i, &z);
                }
            }
            level.push(z);
        }
        values.push(level);
    }
    (delta, SimplicialMap { values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::top_simplex;

    #[test]
    fn yoneda_count() {
        let d2 = standard_simplex(2);
        for q in 0..=2 {
            let dq = standard_simplex(q);
            let maps = enumerate_simplicial_maps(&dq, &d2, q, 100_000).unwrap();
            assert_eq!(maps.len(), d2.simplices_at(q).len());
        }
    }

    #[test]
    fn map_of_top_simplex_is_identity() {
        let d2 = standard_simplex(2);
        let (src, m) = map_of_simplex(&d2, &top_simplex(&d2));
        assert!(validate_map(&src, &d2, &m).is_ok());
        for id in src.all_nondegenerate() {
            assert_eq!(m.value(id), &SimplexRef::nondegenerate(id));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let d2 = standard_simplex(2);
        let err = enumerate_simplicial_maps(&d2, &d2, 2, 3);
        assert!(matches!(err, Err(Error::Budget(_))));
    }
}
