use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::elim::{clear_against, negate_row, sub_mul_row};
use super::IntMatrix;

/// Row-style Hermite normal form `U·A = H`.
///
/// `H` is upper echelon with positive pivots, entries above each pivot reduced
/// into `[0, pivot)`, and zero rows at the bottom.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMatrix,
    /// Unimodular transform; `None` when computed by [`hnf_basis`].
    pub u: Option<IntMatrix>,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

pub fn hnf(a: &IntMatrix) -> Hnf {
    run(a, true)
}

/// Hermite form without the transform.
pub fn hnf_basis(a: &IntMatrix) -> Hnf {
    run(a, false)
}

fn run(a: &IntMatrix, track: bool) -> Hnf {
    let (m, n) = (a.rows(), a.cols());
    let mut rows = a.to_rows();
    let mut u = track.then(|| IntMatrix::identity(m).to_rows());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let best = (r..m)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()));
        let Some(best) = best else { continue };
        rows.swap(r, best);
        if let Some(u) = u.as_mut() {
            u.swap(r, best);
        }
        for i in r + 1..m {
            if !rows[i][c].is_zero() {
                clear_against(&mut rows, u.as_mut(), r, i, c);
            }
        }
        if rows[r][c].is_negative() {
            negate_row(&mut rows, r);
            if let Some(u) = u.as_mut() {
                negate_row(u, r);
            }
        }
        let piv = rows[r][c].clone();
        for i in 0..r {
            let q = rows[i][c].div_floor(&piv);
            if !q.is_zero() {
                sub_mul_row(&mut rows, i, r, &q);
                if let Some(u) = u.as_mut() {
                    sub_mul_row(u, i, r, &q);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Hnf {
        h: IntMatrix::from_big_rows(n, rows),
        u: u.map(|u| IntMatrix::from_big_rows(m, u)),
        rank: r,
        pivots,
    }
}

impl Hnf {
    /// Solves `y·H = v` over the integers using the echelon structure; returns the
    /// coefficients on the first `rank` rows of `H`.
    pub fn solve_rows(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.h.cols(), "vector length mismatch");
        let mut residual = v.to_vec();
        let mut y = Vec::with_capacity(self.rank);
        for (k, &c) in self.pivots.iter().enumerate() {
            // columns before the pivot must already be cleared
            let piv = &self.h[(k, c)];
            let (q, rem) = residual[c].div_mod_floor(piv);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (j, r) in residual.iter_mut().enumerate().skip(c) {
                    let h = &self.h[(k, j)];
                    if !h.is_zero() {
                        *r -= &q * h;
                    }
                }
            }
            y.push(q);
        }
        residual.iter().all(Zero::is_zero).then_some(y)
    }
}
