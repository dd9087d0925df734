use std::collections::BTreeSet;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::grp::{ElemId, SubgroupG};
use crate::symb::CContext;

/// A set of pairs `(H, Y_0)` closed under conjugation and under the extension
/// rule `(H, Y_0) ↦ (⟨H, g⟩, Y_0)` for `H ≠ 1` and `g` central in `Y_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFilter {
    pairs: BTreeSet<(SubgroupG, SubgroupG)>,
}

impl GFilter {
    /// Validates that `pairs` already form a filter.
    pub fn new(ctx: &CContext, pairs: impl IntoIterator<Item = (SubgroupG, SubgroupG)>) -> Result<Self> {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        for (h, y0) in &pairs {
            check_pair(ctx, h, y0)?;
        }
        for (h, y0) in &pairs {
            for img in required(ctx, h, y0) {
                if !pairs.contains(&img) {
                    return Err(Error::InvalidFilter(format!(
                        "missing ({:?}, {:?}) required by ({:?}, {:?})",
                        img.0.elems(),
                        img.1.elems(),
                        h.elems(),
                        y0.elems()
                    )));
                }
            }
        }
        Ok(GFilter { pairs })
    }

    /// Smallest filter containing `pairs`.
    pub fn generated_by(ctx: &CContext, pairs: impl IntoIterator<Item = (SubgroupG, SubgroupG)>) -> Result<Self> {
        let mut out = BTreeSet::new();
        let mut todo: Vec<(SubgroupG, SubgroupG)> = pairs.into_iter().collect();
        while let Some(p) = todo.pop() {
            if out.contains(&p) {
                continue;
            }
            check_pair(ctx, &p.0, &p.1)?;
            todo.extend(required(ctx, &p.0, &p.1));
            out.insert(p);
        }
        Ok(GFilter { pairs: out })
    }

    /// Every pair; filtering by it changes nothing.
    pub fn full(ctx: &CContext) -> Self {
        let g = ctx.group();
        let mut pairs = BTreeSet::new();
        for rep in ctx.abelian_classes() {
            for x in 0..g.order() as ElemId {
                let h = g.conjugate(rep, x);
                for y0 in g.subgroups_between(&h, &g.centralizer(&h)) {
                    pairs.insert((h.clone(), y0));
                }
            }
        }
        GFilter { pairs }
    }

    /// `{(G, 1)}` for abelian `G`.
    pub fn top(ctx: &CContext) -> Result<Self> {
        if !ctx.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let g = ctx.group().whole();
        GFilter::new(ctx, [(g.clone(), g)])
    }

    pub fn contains(&self, h: &SubgroupG, y0: &SubgroupG) -> bool {
        self.pairs.contains(&(h.clone(), y0.clone()))
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(SubgroupG, SubgroupG)> {
        self.pairs.iter()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Content hash, used to key cached presentations.
    pub fn hash_hex(&self) -> String {
        let mut h = Sha256::new();
        for (a, b) in &self.pairs {
            h.update(format!("{:?}/{:?};", a.elems(), b.elems()));
        }
        hex::encode(h.finalize())
    }
}

fn check_pair(ctx: &CContext, h: &SubgroupG, y0: &SubgroupG) -> Result<()> {
    let g = ctx.group();
    if !g.is_subgroup(h) || !g.is_abelian_sub(h) {
        return Err(Error::InvalidFilter(format!("{:?} is not an abelian subgroup", h.elems())));
    }
    if !g.is_subgroup(y0) || !h.is_subset_of(y0) || !y0.is_subset_of(&g.centralizer(h)) {
        return Err(Error::InvalidFilter(format!("{:?} is not between H and Z_G(H)", y0.elems())));
    }
    Ok(())
}

/// Pairs a filter containing `(h, y0)` must also contain.
fn required(ctx: &CContext, h: &SubgroupG, y0: &SubgroupG) -> Vec<(SubgroupG, SubgroupG)> {
    let g = ctx.group();
    let mut out: Vec<(SubgroupG, SubgroupG)> =
        (0..g.order() as ElemId).map(|x| (g.conjugate(h, x), g.conjugate(y0, x))).collect();
    if !h.is_trivial() {
        let ygens = g.small_gens(y0);
        for &x in y0.elems() {
            if !h.contains(x) && ygens.iter().all(|&y| g.commute(x, y)) {
                out.push((g.extend(h, x), y0.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgrp::FinAbGroup;
    use crate::symb::csym::tests::ctx_s3;

    #[test]
    fn top_filter_for_abelian_groups() {
        let ctx = CContext::from_abelian(&FinAbGroup::cyclic(4)).unwrap();
        let f = GFilter::top(&ctx).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(GFilter::top(&ctx_s3()).unwrap_err(), Error::NotAbelian);
    }

    #[test]
    fn removing_a_conjugate_breaks_the_filter() {
        let ctx = ctx_s3();
        let g = ctx.group();
        let c2 = ctx.abelian_classes()[1].clone();
        assert_eq!(c2.order(), 2);
        let f = GFilter::generated_by(&ctx, [(c2.clone(), c2.clone())]).unwrap();
        assert_eq!(f.len(), 3);
        assert!(GFilter::new(&ctx, f.pairs().cloned()).is_ok());
        let mut pairs: Vec<_> = f.pairs().cloned().collect();
        pairs.pop();
        assert!(matches!(GFilter::new(&ctx, pairs), Err(Error::InvalidFilter(_))));
        let _ = g;
    }

    #[test]
    fn extension_rule_is_enforced() {
        let ctx = CContext::from_abelian(&FinAbGroup::new(vec![2, 2]).unwrap()).unwrap();
        let g = ctx.group();
        let whole = g.whole();
        let h = g.closure(&[1]);
        assert_eq!(h.order(), 2);
        // (H, G) with H of order 2 forces (G, G)
        assert!(matches!(GFilter::new(&ctx, [(h.clone(), whole.clone())]), Err(Error::InvalidFilter(_))));
        let f = GFilter::generated_by(&ctx, [(h.clone(), whole.clone())]).unwrap();
        assert!(f.contains(&whole, &whole));
        // the trivial group is exempt
        assert!(GFilter::new(&ctx, [(SubgroupG::trivial(), whole)]).is_ok());
    }

    #[test]
    fn full_filter_is_valid() {
        let ctx = ctx_s3();
        let f = GFilter::full(&ctx);
        assert!(GFilter::new(&ctx, f.pairs().cloned()).is_ok());
    }
}
