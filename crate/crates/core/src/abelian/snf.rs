//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`smith_normal_form`]: `u · a · v = d` with `u`, `v` unimodular
/// and `d` diagonal with `d_1 | d_2 | …`, all nonnegative.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// The diagonal entries `d_i` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    /// `row[dst] += c · row[src]`
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        let neg = -c;
        self.u_inv.add_col_multiple(src, dst, &neg);
    }

    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        self.u.negate_row(r);
        self.u_inv.negate_col(r);
    }

    /// Clears `a[i][t]` against the pivot `a[t][t]`, leaving the gcd on the pivot.
    fn clear_below(&mut self, t: usize, i: usize) {
        let p = self.a[(t, t)].clone();
        let b = self.a[(i, t)].clone();
        let (q, rem) = b.div_rem(&p);
        if rem.is_zero() {
            self.add_row(i, t, &-q);
            return;
        }
        let eg = p.extended_gcd(&b);
        let (g, x, y) = (eg.gcd, eg.x, eg.y);
        let pg = &p / &g;
        let bg = &b / &g;
        // rows (t, i) <- (x·t + y·i, -bg·t + pg·i); inverse is [[pg, -y], [bg, x]].
        self.a.combine_rows(t, i, &x, &y, &-&bg, &pg);
        self.u.combine_rows(t, i, &x, &y, &-&bg, &pg);
        self.u_inv.combine_cols(t, i, &pg, &bg, &-&y, &x);
    }

    fn clear_right(&mut self, t: usize, j: usize) {
        let p = self.a[(t, t)].clone();
        let b = self.a[(t, j)].clone();
        let (q, rem) = b.div_rem(&p);
        if rem.is_zero() {
            self.add_col(j, t, &-q);
            return;
        }
        let eg = p.extended_gcd(&b);
        let (g, x, y) = (eg.gcd, eg.x, eg.y);
        let pg = &p / &g;
        let bg = &b / &g;
        self.a.combine_cols(t, j, &x, &y, &-&bg, &pg);
        self.v.combine_cols(t, j, &x, &y, &-&bg, &pg);
    }
}

/// Diagonalises `a` by unimodular row and column operations.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = a.shape();
    let mut r = Reducer {
        a: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
    };
    let k = m.min(n);
    for t in 0..k {
        // pivot: smallest nonzero absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = &r.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if r.a[(bi, bj)].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);
        loop {
            for i in t + 1..m {
                if !r.a[(i, t)].is_zero() {
                    r.clear_below(t, i);
                }
            }
            for j in t + 1..n {
                if !r.a[(t, j)].is_zero() {
                    r.clear_right(t, j);
                }
            }
            let column_clean = (t + 1..m).all(|i| r.a[(i, t)].is_zero());
            if !column_clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let p = r.a[(t, t)].clone();
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !r.a[(i, j)].is_multiple_of(&p)));
            match bad_row {
                Some(i) => r.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if r.a[(t, t)].is_negative() {
            r.negate_row(t);
        }
    }
    SmithForm {
        d: r.a,
        u: r.u,
        u_inv: r.u_inv,
        v: r.v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "U A V != D for {a}");
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        s
    }

    #[test]
    fn zero_one_by_one() {
        let s = check(&IntMatrix::from_rows(&[[0]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(0)]);
    }

    #[test]
    fn negative_unit_scaling() {
        let s = check(&IntMatrix::from_rows(&[[-2]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2)]);
    }

    #[test]
    fn coprime_diagonal_merges() {
        let s = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn rectangular() {
        let s = check(&IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let s = check(&IntMatrix::from_rows(&[[1, 2, 3]]));
        assert_eq!(s.rank(), 1);
    }
}
