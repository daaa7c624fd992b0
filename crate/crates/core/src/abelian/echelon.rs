use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Column Hermite form `A·V = H` with `V` unimodular.
///
/// The first `rank` columns of `H` are nonzero and in echelon form: column `k`
/// vanishes above row `pivots[k]` and has a positive entry there, with
/// `pivots` strictly increasing. The remaining columns of `H` are zero, so the
/// matching columns of `V` span the integer kernel of `A`.
#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    pub h: IntMatrix,
    pub v: IntMatrix,
    pub pivots: Vec<usize>,
}

impl ColumnEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the integer kernel of the original matrix, as columns.
    pub fn kernel(&self) -> IntMatrix {
        let n = self.v.cols();
        let cols: Vec<usize> = (self.rank()..n).collect();
        self.v.select_columns(&cols)
    }

    /// Basis of the column lattice of the original matrix (echelon form).
    pub fn image(&self) -> IntMatrix {
        let cols: Vec<usize> = (0..self.rank()).collect();
        self.h.select_columns(&cols)
    }

    /// Some integer `x` with `A·x = b`, if one exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let y = echelon_coordinates(&self.h, &self.pivots, b)?;
        let mut full = vec![BigInt::zero(); self.v.cols()];
        for (k, yk) in y.into_iter().enumerate() {
            full[k] = yk;
        }
        Some(self.v.mul_vec(&full))
    }
}

/// Coordinates of `b` in the echelon basis formed by the first `pivots.len()`
/// columns of `h`, if `b` lies in their integer span.
pub fn echelon_coordinates(h: &IntMatrix, pivots: &[usize], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(h.rows(), b.len());
    let mut residual = b.to_vec();
    let mut y = Vec::with_capacity(pivots.len());
    for (k, &r) in pivots.iter().enumerate() {
        let p = &h[(r, k)];
        let (q, rem) = residual[r].div_rem(p);
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (i, res) in residual.iter_mut().enumerate().skip(r) {
                let hk = &h[(i, k)];
                if !hk.is_zero() {
                    *res -= &q * hk;
                }
            }
        }
        y.push(q);
    }
    if residual.iter().all(Zero::is_zero) {
        Some(y)
    } else {
        None
    }
}

/// Computes the column Hermite form of `a` together with its transform.
pub fn column_echelon(a: &IntMatrix) -> ColumnEchelon {
    let (m, n) = a.shape();
    let mut h = a.clone();
    let mut v = IntMatrix::identity(n);
    let mut pivots = Vec::new();
    let mut c = 0;
    for r in 0..m {
        if c == n {
            break;
        }
        for j in c + 1..n {
            if h[(r, j)].is_zero() {
                continue;
            }
            if h[(r, c)].is_zero() {
                h.swap_cols(c, j);
                v.swap_cols(c, j);
                continue;
            }
            let a_rc = h[(r, c)].clone();
            let b_rj = h[(r, j)].clone();
            let (q, rem) = b_rj.div_rem(&a_rc);
            if rem.is_zero() {
                let f = -q;
                h.add_col_multiple(j, c, &f);
                v.add_col_multiple(j, c, &f);
            } else {
                let eg = a_rc.extended_gcd(&b_rj);
                let (mut g, mut s, mut t) = (eg.gcd, eg.x, eg.y);
                if g.is_negative() {
                    g = -g;
                    s = -s;
                    t = -t;
                }
                let r2 = -(&b_rj / &g);
                let s2 = &a_rc / &g;
                h.combine_cols(c, j, &s, &t, &r2, &s2);
                v.combine_cols(c, j, &s, &t, &r2, &s2);
            }
        }
        if !h[(r, c)].is_zero() {
            if h[(r, c)].is_negative() {
                h.negate_col(c);
                v.negate_col(c);
            }
            // Reduce earlier columns in this row to keep entries small.
            let p = h[(r, c)].clone();
            for l in 0..c {
                let q = h[(r, l)].div_floor(&p);
                if !q.is_zero() {
                    let f = -q;
                    h.add_col_multiple(l, c, &f);
                    v.add_col_multiple(l, c, &f);
                }
            }
            pivots.push(r);
            c += 1;
        }
    }
    ColumnEchelon { h, v, pivots }
}

/// Integer kernel basis (columns) of `a`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    column_echelon(a).kernel()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_rank_one_row() {
        let a = IntMatrix::from_rows(&[[2, 4, 6]]);
        let e = column_echelon(&a);
        assert_eq!(e.rank(), 1);
        let k = e.kernel();
        assert_eq!(k.shape(), (3, 2));
        assert!(a.mul(&k).is_zero());
        assert_eq!(e.v.determinant().abs(), BigInt::from(1));
    }

    #[test]
    fn solve_detects_divisibility() {
        let a = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
        let e = column_echelon(&a);
        assert_eq!(e.solve(&bi(&[4, 9])), Some(bi(&[2, 3])));
        assert_eq!(e.solve(&bi(&[1, 0])), None);
    }

    #[test]
    fn echelon_of_zero_matrix() {
        let a = IntMatrix::zeros(2, 3);
        let e = column_echelon(&a);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel(), IntMatrix::identity(3));
        assert_eq!(e.solve(&bi(&[0, 0])), Some(bi(&[0, 0, 0])));
    }
}
