//! Symbols of the three Burnside flavors and their relation calculus.
//!
//! * [`BSymbol`]: a multiset of `n` characters generating `H^∨`.
//! * [`CSymbol`]: a triple `(H, Y, β)` inside a finite group `G`.
//! * [`KSymbol`]: a [`CSymbol`] decorated with [`FieldData`].
//!
//! Reordering and conjugation are absorbed by canonical forms, so two symbols are
//! equal under those relations exactly when their canonical keys agree. The
//! vanishing and blow-up relations are expanded into [`ClassVector`]s.

mod bsym;
mod class;
mod compress;
pub(crate) mod csym;
mod ksym;

pub use bsym::{canon_b, expand_b, BSymbol};
pub use class::ClassVector;
pub use compress::compress_witnesses;
pub use csym::{CContext, CSymbol, Values};
pub use ksym::{FieldData, KSymbol};

use crate::error::{Error, Result};

/// Longest character sequence examined by the subset-sum test.
pub const SUMZERO_LIMIT: usize = 12;

/// Whether some nonempty sub-multiset of `chars` sums to zero, coordinatewise
/// modulo `moduli`.
pub(crate) fn subset_sums_to_zero(chars: &[Vec<u64>], moduli: &[u64]) -> Result<bool> {
    if chars.len() > SUMZERO_LIMIT {
        return Err(Error::TooLong(chars.len()));
    }
    let k = chars.len();
    for mask in 1u32..(1 << k) {
        let mut acc = vec![0u64; moduli.len()];
        for (i, c) in chars.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for ((a, &x), &m) in acc.iter_mut().zip(c).zip(moduli) {
                    *a = (*a + x) % m;
                }
            }
        }
        if acc.iter().all(|&a| a == 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Multisets of size `k` drawn from `0..m`, as nondecreasing index vectors in
/// lexicographic order.
pub(crate) fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(m, k, i, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 0, &mut cur, &mut out);
    out
}
