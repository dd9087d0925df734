use super::{CContext, CSymbol};
use crate::error::{Error, Result};

/// All canonical `(H', Y', (b'_1, b'_2))` in dimension `n` whose blow-up relation at
/// the pair `(0, 1)` has `s` as its third term.
///
/// An empty list certifies that the divisor symbol `s` is incompressible at the
/// combinatorial level, relative to the ambient group.
pub fn compress_witnesses(ctx: &CContext, s: &CSymbol, n: usize) -> Result<Vec<(CSymbol, (usize, usize))>> {
    if s.len() != 1 {
        return Err(Error::NotDivisorSymbol(format!("|beta| = {}", s.len())));
    }
    if s.h().is_trivial() {
        return Err(Error::NotDivisorSymbol("H is trivial".into()));
    }
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for p in ctx.enumerate_lengths(2..=2)? {
        let [_, _, bar] = ctx.expand_b_terms(&p, 0, 1)?;
        if bar == *s {
            out.push((p, (0, 1)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgrp::FinAbGroup;
    use crate::symb::csym::tests::{ctx_s3, top};

    #[test]
    fn z2_divisor_has_one_parent() {
        let ctx = CContext::from_abelian(&FinAbGroup::cyclic(2)).unwrap();
        let s = top(&ctx, &[1]);
        let w = compress_witnesses(&ctx, &s, 2).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].0, top(&ctx, &[1, 1]));
    }

    #[test]
    fn curve_dimension_admits_no_parent() {
        let ctx = CContext::from_abelian(&FinAbGroup::cyclic(3)).unwrap();
        let s = top(&ctx, &[1]);
        assert!(compress_witnesses(&ctx, &s, 1).unwrap().is_empty());
    }

    #[test]
    fn every_witness_reproduces_the_symbol() {
        let ctx = ctx_s3();
        for s in ctx.enumerate_lengths(1..=1).unwrap() {
            if s.h().is_trivial() || s.vanish_v() {
                continue;
            }
            let w = compress_witnesses(&ctx, &s, 2).unwrap();
            // (H, Y, (b, b)) always qualifies
            assert!(!w.is_empty());
            for (p, (i, j)) in w {
                assert_eq!(ctx.expand_b_terms(&p, i, j).unwrap()[2], s);
            }
        }
    }

    #[test]
    fn rejects_non_divisor_symbols() {
        let ctx = CContext::from_abelian(&FinAbGroup::cyclic(2)).unwrap();
        assert!(matches!(compress_witnesses(&ctx, &top(&ctx, &[1, 1]), 2), Err(Error::NotDivisorSymbol(_))));
    }
}
