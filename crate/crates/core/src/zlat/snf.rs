use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::elim::{add_row, clear_against, negate_row};
use super::IntMatrix;

/// Smith normal form `U·A·V = D`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SnfData {
    /// Diagonal `d_1 | d_2 | ... | d_k`, `k = min(rows, cols)`, nonnegative.
    pub diag: Vec<BigInt>,
    /// Row transform, `rows x rows`. Absent when only the right transform was tracked.
    pub u: Option<IntMatrix>,
    pub v: IntMatrix,
}

impl SnfData {
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    pub fn d_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        IntMatrix::diagonal(rows, cols, &self.diag)
    }
}

pub fn snf(a: &IntMatrix) -> SnfData {
    Smith::new(a, true).run()
}

/// Smith form tracking only `V`; enough to decide membership in the row lattice.
pub fn snf_right(a: &IntMatrix) -> SnfData {
    Smith::new(a, false).run()
}

struct Smith {
    m: usize,
    n: usize,
    a: Vec<Vec<BigInt>>,
    u: Option<Vec<Vec<BigInt>>>,
    // V stored transposed so column operations become row operations.
    vt: Vec<Vec<BigInt>>,
}

impl Smith {
    fn new(a: &IntMatrix, track_u: bool) -> Self {
        Smith {
            m: a.rows(),
            n: a.cols(),
            a: a.to_rows(),
            u: track_u.then(|| IntMatrix::identity(a.rows()).to_rows()),
            vt: IntMatrix::identity(a.cols()).to_rows(),
        }
    }

    fn run(mut self) -> SnfData {
        let k = self.m.min(self.n);
        let mut diag = Vec::with_capacity(k);
        for t in 0..k {
            let Some((pi, pj)) = self.find_pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            self.reduce_at(t);
            if self.a[t][t].is_negative() {
                negate_row(&mut self.a, t);
                if let Some(u) = self.u.as_mut() {
                    negate_row(u, t);
                }
            }
            diag.push(self.a[t][t].clone());
        }
        diag.resize(k, BigInt::zero());
        let v = IntMatrix::from_big_rows(self.n, self.vt).transpose();
        SnfData { diag, u: self.u.map(|u| IntMatrix::from_big_rows(self.m, u)), v }
    }

    /// Smallest nonzero entry by absolute value in the trailing block; stops at a unit.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if x.magnitude().bits() == 1 {
                    return Some((i, j));
                }
                match best {
                    Some((bi, bj)) if self.a[bi][bj].magnitude() <= x.magnitude() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn reduce_at(&mut self, t: usize) {
        loop {
            // Column t below the pivot.
            for i in t + 1..self.m {
                if !self.a[i][t].is_zero() {
                    clear_against(&mut self.a, self.u.as_mut(), t, i, t);
                }
            }
            // Row t right of the pivot, by column operations.
            for j in t + 1..self.n {
                if !self.a[t][j].is_zero() {
                    self.clear_col(t, j);
                }
            }
            if (t + 1..self.m).any(|i| !self.a[i][t].is_zero()) {
                continue;
            }
            if self.a[t][t].magnitude().bits() == 1 {
                return;
            }
            let piv = self.a[t][t].clone();
            let bad = (t + 1..self.m).find(|&i| {
                self.a[i][t + 1..].iter().any(|x| !x.is_zero() && !x.is_multiple_of(&piv))
            });
            match bad {
                Some(i) => {
                    add_row(&mut self.a, t, i);
                    if let Some(u) = self.u.as_mut() {
                        add_row(u, t, i);
                    }
                }
                None => return,
            }
        }
    }

    /// Zeroes `a[t][j]` against `a[t][t]` by a unimodular transform of columns `t`, `j`.
    fn clear_col(&mut self, t: usize, j: usize) {
        let piv = self.a[t][t].clone();
        let val = self.a[t][j].clone();
        let (q, r) = val.div_mod_floor(&piv);
        if r.is_zero() {
            for row in self.a.iter_mut() {
                if !row[t].is_zero() {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
            }
            super::elim::sub_mul_row(&mut self.vt, j, t, &q);
            return;
        }
        let (g, x, y) = super::elim::egcd(&piv, &val);
        let c = -(&val / &g);
        let d = &piv / &g;
        for row in self.a.iter_mut() {
            let (p, s) = (&row[t], &row[j]);
            if p.is_zero() && s.is_zero() {
                continue;
            }
            let np = &x * p + &y * s;
            let ns = &c * p + &d * s;
            row[t] = np;
            row[j] = ns;
        }
        super::elim::combine_rows(&mut self.vt, t, j, [&x, &y, &c, &d]);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.a.swap(a, b);
        if let Some(u) = self.u.as_mut() {
            u.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(a, b);
        }
        self.vt.swap(a, b);
    }
}
