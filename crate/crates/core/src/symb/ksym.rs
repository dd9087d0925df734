use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CContext, CSymbol, ClassVector, Values};
use crate::error::{Error, Result};
use crate::grp::SubgroupG;

/// Symbolic stand-in for the function field of a stratum.
///
/// `label` names the base field; `trdeg` counts the `params` adjoined indeterminates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldData {
    pub label: String,
    pub trdeg: usize,
    pub params: usize,
}

impl FieldData {
    pub fn new(label: impl Into<String>, trdeg: usize, params: usize) -> Result<Self> {
        if params > trdeg {
            return Err(Error::Invalid(format!("params {params} exceed trdeg {trdeg}")));
        }
        Ok(FieldData { label: label.into(), trdeg, params })
    }

    /// `K(t_1, ..., t_m)`.
    pub fn adjoin(&self, m: usize) -> FieldData {
        FieldData { label: self.label.clone(), trdeg: self.trdeg + m, params: self.params + m }
    }
}

/// Generator `(H, Y ↺ K, β)` of `Symb_n(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KSymbol {
    c: CSymbol,
    field: FieldData,
    /// Caller-asserted surjectivity of the restriction map on `H^1`; never verified.
    h1_surjective: bool,
}

impl KSymbol {
    pub fn c(&self) -> &CSymbol {
        &self.c
    }

    pub fn field(&self) -> &FieldData {
        &self.field
    }

    pub fn h1_surjective(&self) -> bool {
        self.h1_surjective
    }

    pub fn n(&self) -> usize {
        self.c.len() + self.field.trdeg
    }

    /// Image under the forgetful map to the combinatorial group (coefficient 1).
    pub fn forget(&self) -> CSymbol {
        self.c.clone()
    }

    pub fn vanish_v(&self) -> bool {
        self.c.vanish_v()
    }

    pub fn vanish_sumzero(&self) -> Result<bool> {
        self.c.vanish_sumzero()
    }

    /// Stable-range vanishing: `params >= min order(b_i) - 1`.
    pub fn vanish_stable(&self) -> Result<bool> {
        let min = self.c.char_orders().into_iter().min().ok_or(Error::EmptyBeta)?;
        Ok(self.field.params as u64 + 1 >= min)
    }

    fn with(&self, c: CSymbol, extra: usize) -> KSymbol {
        KSymbol { c, field: self.field.adjoin(extra), h1_surjective: self.h1_surjective }
    }
}

impl fmt::Display for KSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let FieldData { label, trdeg, params } = &self.field;
        write!(f, "{} ↺ {label}[trdeg={trdeg}, params={params}]", self.c)
    }
}

impl CContext {
    /// Validates and canonicalizes a field-decorated symbol in dimension `n`.
    pub fn canon_k(
        &self,
        h: &SubgroupG,
        y0: &SubgroupG,
        beta: Vec<Values>,
        field: FieldData,
        h1_surjective: bool,
        n: usize,
    ) -> Result<KSymbol> {
        if field.params > field.trdeg {
            return Err(Error::Invalid(format!("params {} exceed trdeg {}", field.params, field.trdeg)));
        }
        if beta.len() + field.trdeg != n {
            return Err(Error::Invalid(format!(
                "|beta| = {} but n - trdeg = {}",
                beta.len(),
                n as isize - field.trdeg as isize
            )));
        }
        let c = self.canon_c(h, y0, beta, n)?;
        Ok(KSymbol { c, field, h1_surjective })
    }

    /// Blow-up relation; the third term gains one indeterminate.
    pub fn expand_b_k(&self, s: &KSymbol, i: usize, j: usize) -> Result<ClassVector<KSymbol>> {
        let [t1, t2, bar] = self.expand_b_terms(&s.c, i, j)?;
        Ok(ClassVector::from_terms([(s.with(t1, 0), 1), (s.with(t2, 0), 1), (s.with(bar, 1), 1)]))
    }

    /// Codimension-`j` relation; the term for `I` gains `|I| - 1` indeterminates.
    pub fn expand_codimj_k(&self, s: &KSymbol, positions: &[usize]) -> Result<ClassVector<KSymbol>> {
        let bound = s.n() as isize - positions.len() as isize;
        if s.field.trdeg as isize > bound {
            return Err(Error::TrdegTooLarge { trdeg: s.field.trdeg, bound });
        }
        let terms = self.codimj_terms(&s.c, positions)?;
        Ok(ClassVector::from_terms(terms.into_iter().map(|(t, k)| (s.with(t, k - 1), 1))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgrp::{AbElem, FinAbGroup};

    fn ksym(ctx: &CContext, chars: &[u64], trdeg: usize, params: usize) -> KSymbol {
        let g = ctx.group().whole();
        let beta = chars.iter().map(|&c| ctx.values_from_coords(&AbElem(vec![c])).unwrap()).collect();
        let n = chars.len() + trdeg;
        ctx.canon_k(&g, &g, beta, FieldData::new("k(F)", trdeg, params).unwrap(), true, n).unwrap()
    }

    #[test]
    fn stable_range_examples() {
        let z2 = CContext::from_abelian(&FinAbGroup::cyclic(2)).unwrap();
        assert!(ksym(&z2, &[1, 1], 1, 1).vanish_stable().unwrap());
        assert!(!ksym(&z2, &[1, 1], 0, 0).vanish_stable().unwrap());
        let z10 = CContext::from_abelian(&FinAbGroup::cyclic(10)).unwrap();
        // orders 2 and 5
        assert!(ksym(&z10, &[5, 2], 1, 1).vanish_stable().unwrap());
        let z1 = CContext::from_abelian(&FinAbGroup::trivial()).unwrap();
        assert_eq!(ksym(&z1, &[], 2, 0).vanish_stable().unwrap_err(), Error::EmptyBeta);
    }

    #[test]
    fn length_constraint() {
        let z2 = CContext::from_abelian(&FinAbGroup::cyclic(2)).unwrap();
        let g = z2.group().whole();
        let f = FieldData::new("k", 1, 0).unwrap();
        assert!(matches!(z2.canon_k(&g, &g, vec![vec![0, 1]], f.clone(), true, 3), Err(Error::Invalid(_))));
        assert!(z2.canon_k(&g, &g, vec![vec![0, 1]], f, true, 2).is_ok());
        assert!(FieldData::new("k", 0, 1).is_err());
    }

    #[test]
    fn bar_term_gains_a_parameter() {
        let z2 = CContext::from_abelian(&FinAbGroup::cyclic(2)).unwrap();
        let s = ksym(&z2, &[1, 1], 0, 0);
        let e = z2.expand_b_k(&s, 0, 1).unwrap();
        let fields: Vec<(usize, usize)> = e.iter().map(|(t, _)| (t.field().trdeg, t.field().params)).collect();
        assert!(fields.contains(&(1, 1)));
        assert!(e.iter().all(|(t, _)| t.n() == 2));
        assert_eq!(s.forget(), s.c().clone());
    }

    #[test]
    fn trdeg_side_condition() {
        let z2 = CContext::from_abelian(&FinAbGroup::cyclic(2)).unwrap();
        // n = 4: trdeg 2 allows j = 2
        let s = ksym(&z2, &[1, 1], 2, 0);
        assert!(z2.expand_codimj_k(&s, &[0, 1]).is_ok());
        // n = 3, trdeg 2 = n - 1 > n - 2
        let s = ksym(&z2, &[1], 2, 0);
        assert_eq!(
            z2.expand_codimj_k(&s, &[0, 1]).unwrap_err(),
            Error::TrdegTooLarge { trdeg: 2, bound: 1 }
        );
        let s = ksym(&z2, &[1, 1, 1], 0, 0);
        let e = z2.expand_codimj_k(&s, &[0, 1, 2]).unwrap();
        assert!(e.iter().all(|(t, _)| t.n() == 3));
    }
}
