//! Unimodular row and column operations shared by the Hermite and Smith reductions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Returns `(g, x, y)` with `g = gcd(a, b) > 0` and `x*a + y*b = g`.
/// At least one of `a`, `b` must be nonzero.
pub(crate) fn egcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// `rows[dst] -= k * rows[src]`.
pub(crate) fn sub_mul_row(rows: &mut [Vec<BigInt>], dst: usize, src: usize, k: &BigInt) {
    if k.is_zero() || dst == src {
        return;
    }
    let (d, s) = two_rows(rows, dst, src);
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= k * y;
        }
    }
}

/// `rows[dst] += rows[src]`.
pub(crate) fn add_row(rows: &mut [Vec<BigInt>], dst: usize, src: usize) {
    let (d, s) = two_rows(rows, dst, src);
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x += y;
        }
    }
}

/// Replaces `(rows[a], rows[b])` by `(x*ra + y*rb, c*ra + d*rb)`.
pub(crate) fn combine_rows(
    rows: &mut [Vec<BigInt>],
    a: usize,
    b: usize,
    coeffs: [&BigInt; 4],
) {
    let [x, y, c, d] = coeffs;
    let (ra, rb) = two_rows(rows, a, b);
    for (p, q) in ra.iter_mut().zip(rb.iter_mut()) {
        if p.is_zero() && q.is_zero() {
            continue;
        }
        let np = x * &*p + y * &*q;
        let nq = c * &*p + d * &*q;
        *p = np;
        *q = nq;
    }
}

pub(crate) fn negate_row(rows: &mut [Vec<BigInt>], i: usize) {
    for x in rows[i].iter_mut() {
        if !x.is_zero() {
            *x = -std::mem::take(x);
        }
    }
}

fn two_rows(rows: &mut [Vec<BigInt>], a: usize, b: usize) -> (&mut Vec<BigInt>, &mut Vec<BigInt>) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&mut lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&mut hi[0], &mut lo[b])
    }
}

/// Zeroes `rows[i][col]` against the pivot `rows[p][col]` by a unimodular
/// transformation of rows `p` and `i`, mirrored on `track` when present.
pub(crate) fn clear_against(
    rows: &mut [Vec<BigInt>],
    track: Option<&mut Vec<Vec<BigInt>>>,
    p: usize,
    i: usize,
    col: usize,
) {
    let piv = rows[p][col].clone();
    let val = rows[i][col].clone();
    if val.is_zero() {
        return;
    }
    let (q, r) = val.div_mod_floor(&piv);
    if r.is_zero() {
        sub_mul_row(rows, i, p, &q);
        if let Some(t) = track {
            sub_mul_row(t, i, p, &q);
        }
        return;
    }
    let (g, x, y) = egcd(&piv, &val);
    let c = -(&val / &g);
    let d = &piv / &g;
    combine_rows(rows, p, i, [&x, &y, &c, &d]);
    if let Some(t) = track {
        combine_rows(t, p, i, [&x, &y, &c, &d]);
    }
}
