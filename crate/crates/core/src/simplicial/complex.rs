//! Finite truncated simplicial sets with faces stored in degeneracy normal form.

use std::collections::BTreeMap;
use std::fmt;

use super::levelwise::{FiniteLevels, SimplicialObject};
use super::word::{words_between, DegeneracyWord};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// A nondegenerate simplex: its dimension and position within that dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId {
    pub dim: usize,
    pub index: usize,
}

/// Normal form `word(base)` of an arbitrary simplex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub word: DegeneracyWord,
    pub base: SimplexId,
}

impl SimplexRef {
    pub fn nondegenerate(base: SimplexId) -> Self {
        Self {
            word: DegeneracyWord::identity(),
            base,
        }
    }

    pub fn dim(&self) -> usize {
        self.base.dim + self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }
}

/// One step in an operator chain as written left to right: `s_j` or `d_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Face(usize),
    Degeneracy(usize),
}

/// Finitely many nondegenerate simplices in each dimension `0..=truncation`.
///
/// Every simplex of every dimension has a unique [`SimplexRef`]; faces of
/// generators may be degenerate and are stored normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    truncation: usize,
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<SimplexRef>>>,
    index: BTreeMap<String, SimplexId>,
}

impl FiniteSimplicialSet {
    pub fn new(truncation: usize) -> Self {
        Self {
            truncation,
            names: vec![Vec::new(); truncation + 1],
            faces: vec![Vec::new(); truncation + 1],
            index: BTreeMap::new(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Adds a nondegenerate simplex of dimension `faces.len() − 1` (a vertex when empty).
    pub fn add_simplex(&mut self, name: &str, faces: Vec<SimplexRef>) -> Result<SimplexId> {
        let dim = match faces.len() {
            0 => 0,
            1 => return Err(Error::Invalid(format!("simplex `{name}` lists a single face"))),
            n => n - 1,
        };
        self.add_simplex_at(dim, name, faces)
    }

    pub fn add_simplex_at(&mut self, dim: usize, name: &str, faces: Vec<SimplexRef>) -> Result<SimplexId> {
        if dim > self.truncation {
            return Err(Error::DimensionMismatch(format!(
                "simplex `{name}` of dimension {dim} above truncation {}",
                self.truncation
            )));
        }
        if self.index.contains_key(name) {
            return Err(Error::Invalid(format!("duplicate simplex name `{name}`")));
        }
        let expected = if dim == 0 { 0 } else { dim + 1 };
        if faces.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "simplex `{name}` of dimension {dim} needs {expected} faces, got {}",
                faces.len()
            )));
        }
        for (i, f) in faces.iter().enumerate() {
            if f.dim() + 1 != dim {
                return Err(Error::DimensionMismatch(format!(
                    "face {i} of `{name}` has dimension {}",
                    f.dim()
                )));
            }
            if f.base.dim >= self.names.len() || f.base.index >= self.names[f.base.dim].len() {
                return Err(Error::UnknownId(format!("face {i} of `{name}`")));
            }
        }
        let id = SimplexId {
            dim,
            index: self.names[dim].len(),
        };
        self.names[dim].push(name.to_string());
        self.faces[dim].push(faces);
        self.index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn num_nondegenerate(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, Vec::len)
    }

    /// Nondegenerate counts in dimensions `0..=truncation`.
    pub fn counts(&self) -> Vec<usize> {
        self.names.iter().map(Vec::len).collect()
    }

    /// Highest dimension carrying a nondegenerate simplex.
    pub fn top_dimension(&self) -> Option<usize> {
        (0..self.names.len()).rev().find(|&n| !self.names[n].is_empty())
    }

    pub fn nondegenerate(&self, n: usize) -> impl Iterator<Item = SimplexId> + '_ {
        (0..self.num_nondegenerate(n)).map(move |index| SimplexId { dim: n, index })
    }

    pub fn all_nondegenerate(&self) -> impl Iterator<Item = SimplexId> + '_ {
        (0..self.names.len()).flat_map(move |n| self.nondegenerate(n))
    }

    pub fn name(&self, id: SimplexId) -> &str {
        &self.names[id.dim][id.index]
    }

    pub fn id(&self, name: &str) -> Option<SimplexId> {
        self.index.get(name).copied()
    }

    pub fn get(&self, name: &str) -> Result<SimplexId> {
        self.id(name).ok_or_else(|| Error::UnknownId(name.to_string()))
    }

    pub fn stored_faces(&self, id: SimplexId) -> &[SimplexRef] {
        &self.faces[id.dim][id.index]
    }

    /// `"s1 s0 v"` style rendering.
    pub fn display(&self, x: &SimplexRef) -> String {
        if x.word.is_empty() {
            self.name(x.base).to_string()
        } else {
            format!("{} {}", x.word, self.name(x.base))
        }
    }

    pub fn face(&self, i: usize, x: &SimplexRef) -> Result<SimplexRef> {
        let m = x.dim();
        if m == 0 || i > m {
            return Err(Error::IndexOutOfRange(format!(
                "d{i} on the {m}-simplex {}",
                self.display(x)
            )));
        }
        let k = x.base.dim;
        let eta = x.word.surjection(k);
        let v = eta[i];
        let mut rest = eta;
        rest.remove(i);
        if rest.contains(&v) {
            return Ok(SimplexRef {
                word: DegeneracyWord::from_surjection(&rest),
                base: x.base,
            });
        }
        // The face hits the base: ∂_i x = (ω ∘ η'')^* b' where ∂_v base = ω^* b'.
        let lowered: Vec<usize> = rest.iter().map(|&t| if t > v { t - 1 } else { t }).collect();
        let stored = &self.faces[k][x.base.index][v];
        let omega = stored.word.surjection(stored.base.dim);
        let comp: Vec<usize> = lowered.iter().map(|&t| omega[t]).collect();
        Ok(SimplexRef {
            word: DegeneracyWord::from_surjection(&comp),
            base: stored.base,
        })
    }

    pub fn degeneracy(&self, j: usize, x: &SimplexRef) -> Result<SimplexRef> {
        let m = x.dim();
        if j > m {
            return Err(Error::IndexOutOfRange(format!(
                "s{j} on the {m}-simplex {}",
                self.display(x)
            )));
        }
        Ok(SimplexRef {
            word: x.word.then_apply(x.base.dim, &[j])?,
            base: x.base,
        })
    }

    /// Applies `ops` right to left to `base`.
    pub fn normalize(&self, ops: &[Op], base: SimplexId) -> Result<SimplexRef> {
        let mut x = SimplexRef::nondegenerate(base);
        for op in ops.iter().rev() {
            x = match *op {
                Op::Face(i) => self.face(i, &x)?,
                Op::Degeneracy(j) => self.degeneracy(j, &x)?,
            };
        }
        Ok(x)
    }

    /// Parses `"s1 s0 v"` or `"d0 e"`: operator tokens then a simplex name.
    pub fn parse_ref(&self, text: &str) -> Result<SimplexRef> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let (base, ops) = tokens
            .split_last()
            .ok_or_else(|| Error::Parse("empty simplex reference".into()))?;
        let base = self.get(base)?;
        let ops = ops.iter().map(|t| parse_op(t)).collect::<Result<Vec<_>>>()?;
        self.normalize(&ops, base)
    }

    /// Every `q`-simplex, grouped by base dimension, then base, then word.
    pub fn simplices_at(&self, q: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for k in 0..=q.min(self.truncation) {
            let words = words_between(k, q);
            for base in self.nondegenerate(k) {
                for w in &words {
                    out.push(SimplexRef { word: w.clone(), base });
                }
            }
        }
        out
    }

    /// Checks `∂_i ∂_j = ∂_{j−1} ∂_i` for `i < j` on every nondegenerate
    /// generator; identities involving degeneracies hold by construction of the
    /// normal form and are confirmed on generators below the truncation.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("simplicial identities");
        for id in self.all_nondegenerate() {
            let x = SimplexRef::nondegenerate(id);
            let q = id.dim;
            for j in 1..=q {
                for i in 0..j {
                    if q < 2 {
                        continue;
                    }
                    let lhs = self.face(i, &self.face(j, &x).expect("in range"));
                    let rhs = self.face(j - 1, &self.face(i, &x).expect("in range"));
                    rep.check(lhs == rhs, "face-face", || {
                        format!(
                            "d{i} d{j} {} = {} but d{} d{i} {} = {}",
                            self.name(id),
                            lhs.as_ref().map(|r| self.display(r)).unwrap_or_default(),
                            j - 1,
                            self.name(id),
                            rhs.as_ref().map(|r| self.display(r)).unwrap_or_default(),
                        )
                    });
                }
            }
            if q >= self.truncation {
                continue;
            }
            for j in 0..=q {
                let sx = self.degeneracy(j, &x).expect("in range");
                for i in 0..=q + 1 {
                    let lhs = self.face(i, &sx).expect("in range");
                    let rhs = if i < j {
                        self.face(i, &x).and_then(|y| self.degeneracy(j - 1, &y))
                    } else if i == j || i == j + 1 {
                        Ok(x.clone())
                    } else {
                        self.face(i - 1, &x).and_then(|y| self.degeneracy(j, &y))
                    };
                    rep.check(rhs.as_ref() == Ok(&lhs), "face-degeneracy", || {
                        format!("d{i} s{j} on {}", self.name(id))
                    });
                }
                for i in 0..=j {
                    let lhs = self.degeneracy(i, &sx).expect("in range");
                    let rhs = self
                        .degeneracy(i, &x)
                        .and_then(|y| self.degeneracy(j + 1, &y))
                        .expect("in range");
                    rep.check(lhs == rhs, "degeneracy-degeneracy", || {
                        format!("s{i} s{j} on {}", self.name(id))
                    });
                }
            }
        }
        rep
    }

    /// A 0-simplex as a reference.
    pub fn vertex(&self, name: &str) -> Result<SimplexRef> {
        let id = self.get(name)?;
        if id.dim != 0 {
            return Err(Error::DimensionMismatch(format!("`{name}` is not a vertex")));
        }
        Ok(SimplexRef::nondegenerate(id))
    }

    /// The vertex `x` restricted to `[k] ⊆ [q]` at position `k`.
    pub fn vertex_of(&self, x: &SimplexRef, k: usize) -> SimplexRef {
        let q = x.dim();
        let mut y = x.clone();
        for i in (k + 1..=q).rev() {
            y = self.face(i, &y).expect("in range");
        }
        for _ in 0..k {
            y = self.face(0, &y).expect("in range");
        }
        y
    }
}

/// Validates all simplicial identities of `x`.
pub fn validate_complex(x: &FiniteSimplicialSet) -> ValidationReport {
    x.validate()
}

fn parse_op(token: &str) -> Result<Op> {
    let (kind, rest) = token.split_at(1);
    let n: usize = rest
        .parse()
        .map_err(|_| Error::Parse(format!("bad operator token `{token}`")))?;
    match kind {
        "s" => Ok(Op::Degeneracy(n)),
        "d" => Ok(Op::Face(n)),
        _ => Err(Error::Parse(format!("bad operator token `{token}`"))),
    }
}

impl SimplicialObject for FiniteSimplicialSet {
    type Simplex = SimplexRef;

    fn dim(&self, x: &SimplexRef) -> usize {
        x.dim()
    }

    fn face(&self, i: usize, x: &SimplexRef) -> SimplexRef {
        FiniteSimplicialSet::face(self, i, x).expect("face index in range")
    }

    fn degeneracy(&self, j: usize, x: &SimplexRef) -> SimplexRef {
        FiniteSimplicialSet::degeneracy(self, j, x).expect("degeneracy index in range")
    }

    fn label(&self, x: &SimplexRef) -> String {
        self.display(x)
    }

    fn is_degenerate(&self, x: &SimplexRef) -> bool {
        x.is_degenerate()
    }
}

impl FiniteLevels for FiniteSimplicialSet {
    fn simplices(&self, q: usize) -> Result<Vec<SimplexRef>> {
        Ok(self.simplices_at(q))
    }
}

impl fmt::Display for FiniteSimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "truncation {}", self.truncation)?;
        for id in self.all_nondegenerate() {
            let faces: Vec<String> = self.stored_faces(id).iter().map(|r| self.display(r)).collect();
            writeln!(f, "  {} [{}]: {}", self.name(id), id.dim, faces.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> FiniteSimplicialSet {
        let mut x = FiniteSimplicialSet::new(1);
        let v = x.add_simplex("v", vec![]).unwrap();
        let vr = SimplexRef::nondegenerate(v);
        x.add_simplex("e", vec![vr.clone(), vr]).unwrap();
        x
    }

    #[test]
    fn normal_forms_of_examples() {
        let x = circle();
        assert_eq!(x.display(&x.parse_ref("s0 s0 v").unwrap()), "s1 s0 v");
        assert_eq!(x.display(&x.parse_ref("d1 s0 e").unwrap()), "e");
        assert_eq!(x.display(&x.parse_ref("d0 s1 e").unwrap()), "s0 v");
        assert_eq!(x.display(&x.parse_ref("d0 e").unwrap()), "v");
        assert_eq!(x.display(&x.parse_ref("d0 s0 v").unwrap()), "v");
    }

    #[test]
    fn face_out_of_range() {
        let x = circle();
        let e = x.parse_ref("e").unwrap();
        assert!(matches!(x.face(2, &e), Err(Error::IndexOutOfRange(_))));
        let v = x.parse_ref("v").unwrap();
        assert!(x.face(0, &v).is_err());
    }

    #[test]
    fn circle_is_valid() {
        assert!(circle().validate().is_ok());
    }

    #[test]
    fn level_sizes() {
        let x = circle();
        // q-simplices: one from v, q from e
        for q in 0..5 {
            assert_eq!(x.simplices_at(q).len(), 1 + q);
        }
    }
}
