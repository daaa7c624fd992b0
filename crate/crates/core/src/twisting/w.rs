//! The W-construction of a simplicial abelian group and its contraction.
//!
//! `W(Γ)_q = Γ_q ⊕ Γ_{q−1} ⊕ … ⊕ Γ_0`, written `(x_q, …, x_0)`, with
//!
//! * `∂_i(x) = (∂_i x_q, ∂_{i−1} x_{q−1}, …, ∂_1 x_{q−i+1}, ∂_0 x_{q−i} + x_{q−i−1}, x_{q−i−2}, …, x_0)` for `i < q`,
//! * `∂_q(x) = (∂_q x_q, …, ∂_1 x_1)`,
//! * `s_i(x) = (s_i x_q, …, s_0 x_{q−i}, 0, x_{q−i−1}, …, x_0)`.
//!
//! The contraction `h_{q−i}: W_q → W_{q+1}` for `0 ≤ i ≤ q` is
//! `(0, …, 0, ∂_0^{q−i} x_q + … + ∂_0 x_{i+1} + x_i, x_{i−1}, …, x_0)`.

use std::collections::BTreeMap;

use crate::abelian::{AbHom, FgAbGroup, IntMatrix, OGSimplicialAbGroup, SimplicialAbGroup};
use crate::error::Result;
use crate::report::ValidationReport;

/// `W(Γ)` through the top level of `Γ`, with its contraction.
#[derive(Debug, Clone)]
pub struct WConstruction {
    complex: SimplicialAbGroup,
    /// `contraction[q][j] = h_j: W_q → W_{q+1}` for `q < top`.
    contraction: Vec<Vec<AbHom>>,
}

/// Block `t` of `W_q` is `Γ_{q−t}`; returns the generator offset of each block.
fn offsets(gamma: &SimplicialAbGroup, q: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(q + 2);
    let mut acc = 0;
    for t in 0..=q {
        out.push(acc);
        acc += gamma.level(q - t).n_gens();
    }
    out.push(acc);
    out
}

/// `∂_0^k: Γ_m → Γ_{m−k}` as a matrix.
fn iterated_d0(gamma: &SimplicialAbGroup, m: usize, k: usize) -> IntMatrix {
    let mut acc = IntMatrix::identity(gamma.level(m).n_gens());
    for r in 0..k {
        acc = gamma.face(m - r, 0).matrix().mul(&acc);
    }
    acc
}

impl WConstruction {
    pub fn new(gamma: &SimplicialAbGroup) -> Result<Self> {
        let top = gamma.top();
        let levels: Vec<FgAbGroup> = (0..=top)
            .map(|q| FgAbGroup::direct_sum(&(0..=q).rev().map(|p| gamma.level(p).clone()).collect::<Vec<_>>()))
            .collect();
        let mut faces = Vec::with_capacity(top + 1);
        let mut degens = Vec::with_capacity(top + 1);
        let mut contraction = Vec::with_capacity(top);
        for q in 0..=top {
            let src = offsets(gamma, q);
            let mut fq = Vec::new();
            if q >= 1 {
                let tgt = offsets(gamma, q - 1);
                for i in 0..=q {
                    let mut m = IntMatrix::zeros(tgt[q], src[q + 1]);
                    for t in 0..i {
                        m.set_block(tgt[t], src[t], gamma.face(q - t, i - t).matrix());
                    }
                    if i < q {
                        m.set_block(tgt[i], src[i], gamma.face(q - i, 0).matrix());
                        m.add_block(
                            tgt[i],
                            src[i + 1],
                            &IntMatrix::identity(gamma.level(q - i - 1).n_gens()),
                        );
                        for t in i + 1..q {
                            m.set_block(
                                tgt[t],
                                src[t + 1],
                                &IntMatrix::identity(gamma.level(q - t - 1).n_gens()),
                            );
                        }
                    }
                    fq.push(AbHom::new(levels[q].clone(), levels[q - 1].clone(), m)?);
                }
            }
            faces.push(fq);
            let mut sq = Vec::new();
            let mut hq = Vec::new();
            if q < top {
                let tgt = offsets(gamma, q + 1);
                for i in 0..=q {
                    let mut m = IntMatrix::zeros(tgt[q + 2], src[q + 1]);
                    for t in 0..=i {
                        m.set_block(tgt[t], src[t], gamma.degeneracy(q - t, i - t).matrix());
                    }
                    for t in i + 2..=q + 1 {
                        m.set_block(
                            tgt[t],
                            src[t - 1],
                            &IntMatrix::identity(gamma.level(q + 1 - t).n_gens()),
                        );
                    }
                    sq.push(AbHom::new(levels[q].clone(), levels[q + 1].clone(), m)?);
                }
                // h_j with j = q − i: output block q + 1 − i collects Σ_k ∂_0^k x_{i+k}.
                for j in 0..=q {
                    let i = q - j;
                    let mut m = IntMatrix::zeros(tgt[q + 2], src[q + 1]);
                    let row = tgt[q + 1 - i];
                    for k in 0..=j {
                        m.set_block(row, src[q - i - k], &iterated_d0(gamma, i + k, k));
                    }
                    for t in q + 2 - i..=q + 1 {
                        m.set_block(
                            tgt[t],
                            src[t - 1],
                            &IntMatrix::identity(gamma.level(q + 1 - t).n_gens()),
                        );
                    }
                    hq.push(AbHom::new(levels[q].clone(), levels[q + 1].clone(), m)?);
                }
                contraction.push(hq);
            }
            degens.push(sq);
        }
        Ok(Self {
            complex: SimplicialAbGroup::new(levels, faces, degens)?,
            contraction,
        })
    }

    pub fn complex(&self) -> &SimplicialAbGroup {
        &self.complex
    }

    /// `h_j: W_q → W_{q+1}`.
    pub fn h(&self, q: usize, j: usize) -> &AbHom {
        &self.contraction[q][j]
    }

    /// The homotopy identities exhibiting `h` as a homotopy from the identity
    /// to the zero map, on every level where all terms are defined:
    ///
    /// `∂_0 h_0 = id`, `∂_{q+1} h_q = 0`, `∂_i h_j = h_{j−1} ∂_i` (`i < j`),
    /// `∂_{j+1} h_{j+1} = ∂_{j+1} h_j`, `∂_i h_j = h_j ∂_{i−1}` (`i > j + 1`),
    /// `s_i h_j = h_{j+1} s_i` (`i ≤ j`), `s_i h_j = h_j s_{i−1}` (`i > j`).
    pub fn validate_contraction(&self) -> ValidationReport {
        let w = &self.complex;
        let top = w.top();
        let mut rep = ValidationReport::new("W contraction");
        let eq = |a: Result<AbHom>, b: Result<AbHom>| matches!((a, b), (Ok(a), Ok(b)) if a.equals(&b));
        for q in 0..top {
            let hq = &self.contraction[q];
            rep.check(
                eq(w.face(q + 1, 0).after(&hq[0]), Ok(AbHom::identity(w.level(q)))),
                "d0 h0 = id",
                || format!("level {q}"),
            );
            rep.check(
                w.face(q + 1, q + 1).after(&hq[q]).map(|m| m.is_zero()).unwrap_or(false),
                "d_{q+1} h_q = 0",
                || format!("level {q}"),
            );
            for j in 0..=q {
                for i in 0..=q + 1 {
                    let lhs = w.face(q + 1, i).after(&hq[j]);
                    if i < j {
                        let rhs = self.contraction[q - 1][j - 1].after(w.face(q, i));
                        rep.check(eq(lhs, rhs), "d_i h_j = h_{j-1} d_i", || {
                            format!("i={i} j={j} level {q}")
                        });
                    } else if i == j + 1 && j < q {
                        let rhs = w.face(q + 1, j + 1).after(&hq[j + 1]);
                        rep.check(eq(lhs, rhs), "d_{j+1} h_{j+1} = d_{j+1} h_j", || {
                            format!("j={j} level {q}")
                        });
                    } else if i > j + 1 {
                        let rhs = self.contraction[q - 1][j].after(w.face(q, i - 1));
                        rep.check(eq(lhs, rhs), "d_i h_j = h_j d_{i-1}", || {
                            format!("i={i} j={j} level {q}")
                        });
                    }
                }
                if q + 2 <= top {
                    for i in 0..=q + 1 {
                        let lhs = w.degeneracy(q + 1, i).after(&hq[j]);
                        if i <= j {
                            let rhs = self.contraction[q + 1][j + 1].after(w.degeneracy(q, i));
                            rep.check(eq(lhs, rhs), "s_i h_j = h_{j+1} s_i", || {
                                format!("i={i} j={j} level {q}")
                            });
                        } else {
                            let rhs = self.contraction[q + 1][j].after(w.degeneracy(q, i - 1));
                            rep.check(eq(lhs, rhs), "s_i h_j = h_j s_{i-1}", || {
                                format!("i={i} j={j} level {q}")
                            });
                        }
                    }
                }
            }
        }
        rep
    }
}

/// `W(Γ)` of an O_G simplicial abelian group, with naturality of the contraction.
#[derive(Debug, Clone)]
pub struct OGWConstruction {
    pub values: Vec<WConstruction>,
    pub functor: OGSimplicialAbGroup,
}

impl OGWConstruction {
    pub fn new(gamma: &OGSimplicialAbGroup) -> Result<Self> {
        let orbit = gamma.orbit_category().clone();
        let values: Vec<WConstruction> = orbit
            .objects()
            .map(|h| WConstruction::new(gamma.value(h)))
            .collect::<Result<_>>()?;
        let mut maps = BTreeMap::new();
        for f in orbit.morphisms() {
            let mut levels = Vec::with_capacity(gamma.top() + 1);
            for q in 0..=gamma.top() {
                let blocks: Vec<IntMatrix> = (0..=q).rev().map(|p| gamma.map(&f, p).matrix().clone()).collect();
                levels.push(AbHom::new(
                    values[f.target].complex.level(q).clone(),
                    values[f.source].complex.level(q).clone(),
                    IntMatrix::block_diag(&blocks),
                )?);
            }
            maps.insert(f, levels);
        }
        let functor = OGSimplicialAbGroup::new(orbit, values.iter().map(|w| w.complex.clone()).collect(), maps)?;
        Ok(Self { values, functor })
    }

    /// Each contraction satisfies the homotopy identities, and
    /// `W(Γ)(ĝ) ∘ h_j = h_j ∘ W(Γ)(ĝ)` for every morphism `ĝ`.
    pub fn validate(&self) -> ValidationReport {
        let orbit = self.functor.orbit_category().clone();
        let mut rep = self.functor.validate("O_G W");
        for (h, w) in self.values.iter().enumerate() {
            let r = w.validate_contraction();
            for mut v in r.violations {
                v.witness = format!("at {}: {}", orbit.key(h), v.witness);
                rep.violations.push(v);
            }
            rep.checks += r.checks;
        }
        for f in orbit.morphisms() {
            let (src, tgt) = (&self.values[f.target], &self.values[f.source]);
            for q in 0..self.functor.top() {
                for j in 0..=q {
                    let lhs = self.functor.map(&f, q + 1).after(src.h(q, j));
                    let rhs = tgt.h(q, j).after(self.functor.map(&f, q));
                    let ok = matches!((lhs, rhs), (Ok(a), Ok(b)) if a.equals(&b));
                    rep.check(ok, "contraction is natural", || {
                        format!("{} at h_{j} on level {q}", orbit.morphism_key(&f))
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
    use num_bigint::BigInt;

    #[test]
    fn constant_z2() {
        let w = WConstruction::new(&SimplicialAbGroup::constant(&FgAbGroup::cyclic(2), 4)).unwrap();
        assert!(w.complex().validate("W").is_ok());
        assert_eq!(w.complex().level(2).order(), Some(BigInt::from(8)));
        let rep = w.validate_contraction();
        assert!(rep.is_ok(), "{rep}");
    }
}
