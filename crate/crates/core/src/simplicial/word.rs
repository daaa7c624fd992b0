use std::fmt;

use crate::error::{Error, Result};

/// The operator `s_{i_k} ∘ … ∘ s_{i_1}` with `i_k > … > i_1`, stored left to right.
///
/// Equivalently a monotone surjection `η: [m] → [k]`; the indices are exactly
/// the positions `j` with `η(j) = η(j+1)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegeneracyWord {
    indices: Vec<usize>,
}

impl DegeneracyWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Invalid(format!(
                "degeneracy indices {indices:?} are not strictly decreasing"
            )));
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.indices.contains(&j)
    }

    /// The surjection `[base_dim + len] → [base_dim]`.
    pub fn surjection(&self, base_dim: usize) -> Vec<usize> {
        let m = base_dim + self.len();
        let mut eta = Vec::with_capacity(m + 1);
        eta.push(0);
        for j in 0..m {
            let step = usize::from(!self.contains(j));
            eta.push(eta[j] + step);
        }
        eta
    }

    /// Reads off the word of a monotone surjection.
    pub fn from_surjection(eta: &[usize]) -> Self {
        let mut indices: Vec<usize> = (0..eta.len().saturating_sub(1))
            .filter(|&j| eta[j] == eta[j + 1])
            .collect();
        indices.reverse();
        Self { indices }
    }

    /// Normal form of `s_{ops[0]} ∘ s_{ops[1]} ∘ … ∘ self` on a base of dimension `base_dim`.
    pub fn then_apply(&self, base_dim: usize, ops: &[usize]) -> Result<Self> {
        let mut eta = self.surjection(base_dim);
        for &j in ops.iter().rev() {
            let m = eta.len() - 1;
            if j > m {
                return Err(Error::IndexOutOfRange(format!("s_{j} on a {m}-simplex")));
            }
            eta.insert(j, eta[j]);
        }
        Ok(Self::from_surjection(&eta))
    }
}

impl fmt::Display for DegeneracyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|j| format!("s{j}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for t in i + 1..k {
                    cur[t] = cur[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Every degeneracy word taking dimension `base_dim` to dimension `q`.
pub fn words_between(base_dim: usize, q: usize) -> Vec<DegeneracyWord> {
    if q < base_dim {
        return Vec::new();
    }
    combinations(q, q - base_dim)
        .into_iter()
        .map(|mut j| {
            j.reverse();
            DegeneracyWord { indices: j }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s0_s0_normalizes_to_s1_s0() {
        let w = DegeneracyWord::identity().then_apply(0, &[0, 0]).unwrap();
        assert_eq!(w.indices(), &[1, 0]);
    }

    #[test]
    fn surjection_round_trip() {
        let w = DegeneracyWord::new(vec![3, 1]).unwrap();
        let eta = w.surjection(2);
        assert_eq!(eta, vec![0, 1, 1, 2, 2]);
        assert_eq!(DegeneracyWord::from_surjection(&eta), w);
    }

    #[test]
    fn rejects_non_decreasing() {
        assert!(DegeneracyWord::new(vec![0, 1]).is_err());
        assert!(DegeneracyWord::new(vec![1, 1]).is_err());
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(words_between(1, 3).len(), 3);
    }
}
