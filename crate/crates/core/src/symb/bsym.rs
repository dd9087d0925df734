use std::fmt;

use serde::{Deserialize, Serialize};

use super::{subset_sums_to_zero, ClassVector};
use crate::abgrp::{Character, FinAbGroup};
use crate::error::{Error, Result};

/// Generator of `B_n(H)`: a sorted sequence of `n` characters generating `H^∨`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BSymbol {
    beta: Vec<Character>,
}

/// Validates and sorts `beta`.
pub fn canon_b(h: &FinAbGroup, mut beta: Vec<Character>) -> Result<BSymbol> {
    if let Some(bad) = beta.iter().find(|b| !h.contains(b)) {
        return Err(Error::NotAnElement(format!("{bad:?} in {h}")));
    }
    if !h.generates(&beta) {
        return Err(Error::NotGenerating);
    }
    beta.sort();
    Ok(BSymbol { beta })
}

impl BSymbol {
    pub(crate) fn sorted_unchecked(mut beta: Vec<Character>) -> Self {
        beta.sort();
        BSymbol { beta }
    }

    pub fn beta(&self) -> &[Character] {
        &self.beta
    }

    pub fn n(&self) -> usize {
        self.beta.len()
    }

    pub fn vanish_v(&self) -> bool {
        self.beta.iter().any(Character::is_zero)
    }

    pub fn vanish_sumzero(&self, h: &FinAbGroup) -> Result<bool> {
        let chars: Vec<Vec<u64>> = self.beta.iter().map(|b| b.0.clone()).collect();
        subset_sums_to_zero(&chars, h.orders())
    }

    /// The same characters followed by `m` zeros.
    pub fn padded(&self, h: &FinAbGroup, m: usize) -> BSymbol {
        let mut beta = self.beta.clone();
        beta.extend(std::iter::repeat(h.zero()).take(m));
        BSymbol::sorted_unchecked(beta)
    }
}

impl fmt::Display for BSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.beta.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Right-hand side of the blow-up relation at positions `i != j` of the sorted sequence.
pub fn expand_b(h: &FinAbGroup, s: &BSymbol, i: usize, j: usize) -> Result<ClassVector<BSymbol>> {
    let n = s.n();
    if i == j || i >= n || j >= n {
        return Err(Error::BadIndex(format!("pair ({i},{j}) for length {n}")));
    }
    let (bi, bj) = (&s.beta[i], &s.beta[j]);
    let with = |x: Character, y: Character| {
        let mut beta = s.beta.clone();
        beta[i] = x;
        beta[j] = y;
        BSymbol::sorted_unchecked(beta)
    };
    if bi == bj {
        return Ok(ClassVector::single(with(h.zero(), bj.clone())));
    }
    let b1 = with(h.sub(bi, bj), bj.clone());
    let b2 = with(bi.clone(), h.sub(bj, bi));
    Ok(ClassVector::from_terms([(b1, 1), (b2, 1)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgrp::AbElem;

    fn sym(h: &FinAbGroup, vals: &[u64]) -> BSymbol {
        canon_b(h, vals.iter().map(|&v| AbElem(vec![v])).collect()).unwrap()
    }

    #[test]
    fn canon_examples() {
        let z2 = FinAbGroup::cyclic(2);
        assert_eq!(sym(&z2, &[1, 0]), sym(&z2, &[0, 1]));
        let z5 = FinAbGroup::cyclic(5);
        assert_eq!(sym(&z5, &[3, 1, 4]).to_string(), "(1,3,4)");
        assert_eq!(
            canon_b(&z2, vec![AbElem(vec![0]), AbElem(vec![0])]).unwrap_err(),
            Error::NotGenerating
        );
        let triv = FinAbGroup::trivial();
        assert!(canon_b(&triv, vec![AbElem(vec![])]).is_ok());
    }

    #[test]
    fn expand_examples() {
        let z2 = FinAbGroup::cyclic(2);
        let s = sym(&z2, &[1, 1]);
        assert_eq!(expand_b(&z2, &s, 0, 1).unwrap(), ClassVector::single(sym(&z2, &[0, 1])));
        let s = sym(&z2, &[0, 1]);
        assert_eq!(
            expand_b(&z2, &s, 0, 1).unwrap(),
            ClassVector::from_terms([(sym(&z2, &[1, 1]), 1), (sym(&z2, &[0, 1]), 1)])
        );
        let z5 = FinAbGroup::cyclic(5);
        let s = sym(&z5, &[1, 3]);
        assert_eq!(
            expand_b(&z5, &s, 0, 1).unwrap(),
            ClassVector::from_terms([(sym(&z5, &[3, 3]), 1), (sym(&z5, &[1, 2]), 1)])
        );
        assert!(matches!(expand_b(&z5, &s, 1, 1), Err(Error::BadIndex(_))));
        assert!(matches!(expand_b(&z5, &s, 0, 2), Err(Error::BadIndex(_))));
    }

    #[test]
    fn vanishing_predicates() {
        let z5 = FinAbGroup::cyclic(5);
        assert!(sym(&z5, &[0, 1]).vanish_v());
        assert!(!sym(&z5, &[1, 3]).vanish_v());
        assert!(sym(&z5, &[1, 4]).vanish_sumzero(&z5).unwrap());
        assert!(!sym(&z5, &[1, 1]).vanish_sumzero(&z5).unwrap());
    }

    #[test]
    fn generation_is_preserved_by_expansion() {
        for orders in [vec![2u64], vec![3], vec![4], vec![5], vec![6], vec![7], vec![8], vec![9], vec![2, 2], vec![3, 3], vec![2, 4]] {
            let h = FinAbGroup::new(orders).unwrap();
            let els = h.elements();
            for a in &els {
                for b in &els {
                    let Ok(s) = canon_b(&h, vec![a.clone(), b.clone()]) else { continue };
                    for (t, _) in expand_b(&h, &s, 0, 1).unwrap().iter() {
                        assert!(h.generates(t.beta()), "{t} from {s}");
                    }
                }
            }
        }
    }
}
