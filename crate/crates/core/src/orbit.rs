//! Finite groups, their subgroups, and the orbit category `O_G`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table on indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Checks closure, associativity, identity and inverses exhaustively.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Invalid("a group needs at least one element".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::DimensionMismatch(format!(
                "multiplication table must be {n}x{n} with entries below {n}"
            )));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(Error::Invalid("duplicate element names".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Invalid("no two-sided identity".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::Invalid(format!("`{}` has no inverse", names[x])))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid(format!(
                            "associativity fails on ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(Self {
            names,
            table,
            identity,
            inverses,
        })
    }

    /// The group with the single element `e`.
    pub fn trivial() -> Self {
        Self::new(vec!["e".into()], vec![vec![0]]).expect("valid table")
    }

    /// `ℤ/n` with elements named `0, …, n−1`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(names, table).expect("cyclic group table is valid")
    }

    /// `S_3` acting on `{1,2,3}`, with elements `e, (12), (13), (23), (123), (132)`.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        // (a·b)(x) = a(b(x))
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = [a[b[0]], a[b[1]], a[b[2]]];
                        perms.iter().position(|p| *p == c).expect("closed")
                    })
                    .collect()
            })
            .collect();
        Self::new(names, table).expect("S_3 table is valid")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g⁻¹ h g`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.inv(g), self.mul(h, g))
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownId(name.to_string()))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// The subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Subgroup {
        let mut members: BTreeSet<usize> = BTreeSet::from([self.identity]);
        let mut frontier: Vec<usize> = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            members: members.into_iter().collect(),
        }
    }

    /// Whether `f: self → other` (given on indices) is a homomorphism.
    pub fn is_homomorphism(&self, other: &FiniteGroup, f: &[usize]) -> bool {
        f.len() == self.order()
            && f.iter().all(|&x| x < other.order())
            && self
                .elements()
                .all(|a| self.elements().all(|b| f[self.mul(a, b)] == other.mul(f[a], f[b])))
    }
}

/// A subgroup, as the sorted list of its member indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Checks closure under products and inverses.
    pub fn new(group: &FiniteGroup, members: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if !set.contains(&group.identity()) {
            return Err(Error::Invalid("subgroup must contain the identity".into()));
        }
        for &a in &set {
            if a >= group.order() || !set.contains(&group.inv(a)) {
                return Err(Error::Invalid("subset is not closed under inverses".into()));
            }
            for &b in &set {
                if !set.contains(&group.mul(a, b)) {
                    return Err(Error::Invalid("subset is not closed under products".into()));
                }
            }
        }
        Ok(Self {
            members: set.into_iter().collect(),
        })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&h| other.contains(h))
    }

    /// Whether `g⁻¹ self g ⊆ other`.
    pub fn subconjugate_into(&self, group: &FiniteGroup, g: usize, other: &Subgroup) -> bool {
        self.members.iter().all(|&h| other.contains(group.conjugate(h, g)))
    }

    /// `{e,a}` style key listing member names in group order.
    pub fn key(&self, group: &FiniteGroup) -> String {
        let names: Vec<&str> = self.members.iter().map(|&m| group.name(m)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Every subgroup of `group`, ordered by size then members.
pub fn all_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut frontier = vec![group.generated(&[])];
    found.insert(frontier[0].clone());
    while let Some(h) = frontier.pop() {
        for g in group.elements() {
            if h.contains(g) {
                continue;
            }
            let mut gens = h.members.clone();
            gens.push(g);
            let k = group.generated(&gens);
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    out
}

/// A morphism `ĝ: G/H → G/K`, `eH ↦ gK`, stored with the least element of `gK`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitMorphism {
    pub source: usize,
    pub target: usize,
    pub rep: usize,
}

/// The category of canonical orbits of a finite group; objects are all
/// subgroups, indexed as in [`all_subgroups`].
#[derive(Debug, Clone)]
pub struct OrbitCategory {
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
}

impl OrbitCategory {
    pub fn new(group: FiniteGroup) -> Self {
        let subgroups = all_subgroups(&group);
        Self { group, subgroups }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, h: usize) -> &Subgroup {
        &self.subgroups[h]
    }

    pub fn num_objects(&self) -> usize {
        self.subgroups.len()
    }

    pub fn objects(&self) -> std::ops::Range<usize> {
        0..self.subgroups.len()
    }

    pub fn index_of(&self, s: &Subgroup) -> Option<usize> {
        self.subgroups.iter().position(|t| t == s)
    }

    /// Index of the trivial subgroup `e`.
    pub fn trivial_object(&self) -> usize {
        0
    }

    /// Index of `G` itself.
    pub fn whole_object(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn key(&self, h: usize) -> String {
        self.subgroups[h].key(&self.group)
    }

    pub fn object_by_key(&self, key: &str) -> Result<usize> {
        self.objects()
            .find(|&h| self.key(h) == key)
            .ok_or_else(|| Error::UnknownId(key.to_string()))
    }

    /// Least element of the coset `g K`.
    pub fn coset_rep(&self, g: usize, k: usize) -> usize {
        self.subgroups[k]
            .members()
            .iter()
            .map(|&x| self.group.mul(g, x))
            .min()
            .expect("subgroups are nonempty")
    }

    /// `ĝ: G/H → G/K`, or an error when `g⁻¹Hg ⊄ K`.
    pub fn morphism(&self, h: usize, k: usize, g: usize) -> Result<OrbitMorphism> {
        if !self.subgroups[h].subconjugate_into(&self.group, g, &self.subgroups[k]) {
            return Err(Error::Invalid(format!(
                "{}^-1 {} {} is not contained in {}",
                self.group.name(g),
                self.key(h),
                self.group.name(g),
                self.key(k)
            )));
        }
        Ok(OrbitMorphism {
            source: h,
            target: k,
            rep: self.coset_rep(g, k),
        })
    }

    /// One morphism per coset `gK` with `g⁻¹Hg ⊆ K`, ordered by representative.
    pub fn hom_set(&self, h: usize, k: usize) -> Vec<OrbitMorphism> {
        let reps: BTreeSet<usize> = self
            .group
            .elements()
            .filter(|&g| self.subgroups[h].subconjugate_into(&self.group, g, &self.subgroups[k]))
            .map(|g| self.coset_rep(g, k))
            .collect();
        reps.into_iter()
            .map(|rep| OrbitMorphism {
                source: h,
                target: k,
                rep,
            })
            .collect()
    }

    pub fn identity(&self, h: usize) -> OrbitMorphism {
        OrbitMorphism {
            source: h,
            target: h,
            rep: self.coset_rep(self.group.identity(), h),
        }
    }

    pub fn is_identity(&self, f: &OrbitMorphism) -> bool {
        f.source == f.target && self.subgroups[f.target].contains(f.rep)
    }

    /// `h ∘ f` for `f: H → K`, `h: K → L`; sends `eH` to `g g' L`.
    pub fn compose(&self, f: &OrbitMorphism, h: &OrbitMorphism) -> Result<OrbitMorphism> {
        if f.target != h.source {
            return Err(Error::Invalid(format!(
                "cannot compose {} with {}",
                self.morphism_key(f),
                self.morphism_key(h)
            )));
        }
        Ok(OrbitMorphism {
            source: f.source,
            target: h.target,
            rep: self.coset_rep(self.group.mul(f.rep, h.rep), h.target),
        })
    }

    /// Every morphism of the category, grouped by source then target.
    pub fn morphisms(&self) -> Vec<OrbitMorphism> {
        let mut out = Vec::new();
        for h in self.objects() {
            for k in self.objects() {
                out.extend(self.hom_set(h, k));
            }
        }
        out
    }

    /// `<H>-><K>@<g>`.
    pub fn morphism_key(&self, f: &OrbitMorphism) -> String {
        format!(
            "{}->{}@{}",
            self.key(f.source),
            self.key(f.target),
            self.group.name(f.rep)
        )
    }

    pub fn morphism_by_key(&self, key: &str) -> Result<OrbitMorphism> {
        let (ends, g) = key
            .rsplit_once('@')
            .ok_or_else(|| Error::Parse(format!("morphism key `{key}` lacks `@`")))?;
        let (h, k) = ends
            .split_once("->")
            .ok_or_else(|| Error::Parse(format!("morphism key `{key}` lacks `->`")))?;
        let h = self.object_by_key(h)?;
        let k = self.object_by_key(k)?;
        let g = self.group.element(g)?;
        self.morphism(h, k, g)
    }
}

impl fmt::Display for OrbitCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<String> = self.objects().map(|h| self.key(h)).collect();
        write!(f, "O_G with objects {}", keys.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&FiniteGroup::cyclic(2)).len(), 2);
        assert_eq!(all_subgroups(&FiniteGroup::trivial()).len(), 1);
        assert_eq!(all_subgroups(&FiniteGroup::symmetric3()).len(), 6);
        assert_eq!(all_subgroups(&FiniteGroup::cyclic(6)).len(), 4);
    }

    #[test]
    fn hom_sets_over_z2() {
        let o = OrbitCategory::new(FiniteGroup::cyclic(2));
        let (e, g) = (o.trivial_object(), o.whole_object());
        assert_eq!(o.hom_set(e, e).len(), 2);
        assert_eq!(o.hom_set(g, e).len(), 0);
        assert_eq!(o.hom_set(e, g).len(), 1);
        assert_eq!(o.hom_set(g, g).len(), 1);
    }

    #[test]
    fn nontrivial_self_map_squares_to_identity() {
        let o = OrbitCategory::new(FiniteGroup::cyclic(2));
        let e = o.trivial_object();
        let t = o.morphism(e, e, 1).unwrap();
        let tt = o.compose(&t, &t).unwrap();
        assert!(o.is_identity(&tt));
        assert!(!o.is_identity(&t));
    }

    #[test]
    fn keys_round_trip() {
        let o = OrbitCategory::new(FiniteGroup::symmetric3());
        for f in o.morphisms() {
            assert_eq!(o.morphism_by_key(&o.morphism_key(&f)).unwrap(), f);
        }
    }

    #[test]
    fn bad_table_rejected() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteGroup::new(names, vec![vec![0, 1], vec![1, 1]]).is_err());
    }
}
