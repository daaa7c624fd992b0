//! Standard simplices `Δ[q]`, whose simplices are monotone vertex tuples.

use super::complex::{FiniteSimplicialSet, SimplexId, SimplexRef};
use super::word::{combinations, DegeneracyWord};

/// `Δ[q]`: nondegenerate simplices are strictly increasing tuples in `0..=q`,
/// named like `(0,2)`; the face `∂_i` deletes the `i`-th entry.
pub fn standard_simplex(q: usize) -> FiniteSimplicialSet {
    let mut x = FiniteSimplicialSet::new(q);
    for k in 0..=q {
        for tuple in combinations(q + 1, k + 1) {
            let faces = if k == 0 {
                Vec::new()
            } else {
                (0..=k)
                    .map(|i| {
                        let mut t = tuple.clone();
                        t.remove(i);
                        SimplexRef::nondegenerate(x.get(&tuple_name(&t)).expect("lower faces exist"))
                    })
                    .collect()
            };
            x.add_simplex_at(k, &tuple_name(&tuple), faces)
                .expect("standard simplex is well formed");
        }
    }
    x
}

pub fn tuple_name(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

/// The top simplex `Δ_q = (0, 1, …, q)`.
pub fn top_simplex(delta: &FiniteSimplicialSet) -> SimplexRef {
    let q = delta.truncation();
    debug_assert_eq!(delta.num_nondegenerate(q), 1);
    SimplexRef::nondegenerate(SimplexId { dim: q, index: 0 })
}

/// The simplex of `Δ[q]` given by a weakly increasing tuple.
pub fn tuple_to_ref(delta: &FiniteSimplicialSet, tuple: &[usize]) -> Option<SimplexRef> {
    if tuple.windows(2).any(|w| w[0] > w[1]) {
        return None;
    }
    let mut distinct = tuple.to_vec();
    distinct.dedup();
    let eta: Vec<usize> = {
        let mut pos = 0;
        let mut out = Vec::with_capacity(tuple.len());
        for (j, &t) in tuple.iter().enumerate() {
            if j > 0 && t != tuple[j - 1] {
                pos += 1;
            }
            out.push(pos);
        }
        out
    };
    let base = delta.id(&tuple_name(&distinct))?;
    Some(SimplexRef {
        word: DegeneracyWord::from_surjection(&eta),
        base,
    })
}

/// Inverse of [`tuple_to_ref`].
pub fn ref_to_tuple(delta: &FiniteSimplicialSet, x: &SimplexRef) -> Vec<usize> {
    let base: Vec<usize> = delta
        .name(x.base)
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|s| s.parse().expect("standard simplex names are tuples"))
        .collect();
    x.word.surjection(x.base.dim).into_iter().map(|p| base[p]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_are_binomial() {
        let d = standard_simplex(3);
        assert_eq!(d.counts(), vec![4, 6, 4, 1]);
        assert!(d.validate().is_ok());
    }

    #[test]
    fn face_of_top_drops_entry() {
        let d = standard_simplex(2);
        let top = top_simplex(&d);
        let f = d.face(1, &top).unwrap();
        assert_eq!(d.display(&f), "(0,2)");
        assert_eq!(ref_to_tuple(&d, &d.face(2, &top).unwrap()), vec![0, 1]);
    }

    #[test]
    fn tuples_round_trip() {
        let d = standard_simplex(2);
        for t in [vec![0, 0, 1], vec![1, 2, 2, 2], vec![0, 1, 2], vec![2]] {
            let r = tuple_to_ref(&d, &t).unwrap();
            assert_eq!(ref_to_tuple(&d, &r), t);
        }
        assert!(tuple_to_ref(&d, &[1, 0]).is_none());
    }
}
