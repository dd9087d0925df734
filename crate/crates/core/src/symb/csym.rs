use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{canon_b, multisets, subset_sums_to_zero, BSymbol, ClassVector};
use crate::abgrp::{AbElem, Character, FinAbGroup};
use crate::error::{Error, Result};
use crate::grp::{ElemId, PermGroup, SubgroupG};

/// A character of an abelian subgroup `H`, as its values on the sorted elements
/// of `H`, in `Z/exp(H)`.
pub type Values = Vec<u64>;

/// Generator `(H, Y, β)` of the combinatorial symbol group, in canonical form.
///
/// `Y ⊆ Z_G(H)/H` is carried both as its preimage `Y_0` and as the sorted list of
/// minimal coset representatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CSymbol {
    h_order: usize,
    h: SubgroupG,
    y_reps: Vec<ElemId>,
    beta: Vec<Values>,
    exp: u64,
    y0: SubgroupG,
}

impl CSymbol {
    pub fn h(&self) -> &SubgroupG {
        &self.h
    }

    pub fn y0(&self) -> &SubgroupG {
        &self.y0
    }

    pub fn y_reps(&self) -> &[ElemId] {
        &self.y_reps
    }

    pub fn beta(&self) -> &[Values] {
        &self.beta
    }

    /// Exponent of `H`; character values live in `Z/exp`.
    pub fn exp(&self) -> u64 {
        self.exp
    }

    pub fn len(&self) -> usize {
        self.beta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beta.is_empty()
    }

    /// The pair `(H, Y_0)` this symbol lives over.
    pub fn pair(&self) -> (&SubgroupG, &SubgroupG) {
        (&self.h, &self.y0)
    }

    pub fn vanish_v(&self) -> bool {
        self.beta.iter().any(|v| v.iter().all(|&x| x == 0))
    }

    pub fn vanish_sumzero(&self) -> Result<bool> {
        let moduli = vec![self.exp; self.h_order];
        subset_sums_to_zero(&self.beta, &moduli)
    }

    /// Orders of the characters in `β`.
    pub fn char_orders(&self) -> Vec<u64> {
        self.beta
            .iter()
            .map(|v| self.exp / v.iter().fold(self.exp, |g, &x| g.gcd(&x)))
            .collect()
    }
}

impl fmt::Display for CSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[ElemId]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let beta: Vec<String> = self
            .beta
            .iter()
            .map(|v| format!("<{}>", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "(H={{{}}}, Y={{{}}}, ({}))", list(self.h.elems()), list(&self.y_reps), beta.join(","))
    }
}

/// The ambient group of combinatorial symbols, with cached subgroup data.
pub struct CContext {
    g: PermGroup,
    abelian: Option<AbelianData>,
    classes: OnceLock<Vec<SubgroupG>>,
}

struct AbelianData {
    group: FinAbGroup,
    coords: Vec<AbElem>,
    ids: HashMap<AbElem, ElemId>,
}

impl fmt::Debug for CContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CContext").field("g", &self.g).finish()
    }
}

impl CContext {
    pub fn new(g: PermGroup) -> Result<Self> {
        let abelian = if g.is_abelian() {
            let (group, coords) = g.abelian_structure(&g.whole())?;
            Some(AbelianData::new(group, coords))
        } else {
            None
        };
        Ok(CContext { g, abelian, classes: OnceLock::new() })
    }

    /// Regular permutation model of a finite abelian group, keeping its coordinates.
    pub fn from_abelian(a: &FinAbGroup) -> Result<Self> {
        let (g, coords) = PermGroup::regular(a)?;
        Ok(CContext { g, abelian: Some(AbelianData::new(a.clone(), coords)), classes: OnceLock::new() })
    }

    pub fn group(&self) -> &PermGroup {
        &self.g
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian.is_some()
    }

    /// Invariant-factor form of `G` when it is abelian.
    pub fn abelian_group(&self) -> Option<&FinAbGroup> {
        self.abelian.as_ref().map(|a| &a.group)
    }

    /// Coordinates of an element when `G` is abelian.
    pub fn coords_of(&self, x: ElemId) -> Option<&AbElem> {
        self.abelian.as_ref().map(|a| &a.coords[x as usize])
    }

    pub fn id_of_coords(&self, c: &AbElem) -> Option<ElemId> {
        self.abelian.as_ref().and_then(|a| a.ids.get(c).copied())
    }

    /// Conjugacy class representatives of abelian subgroups.
    pub fn abelian_classes(&self) -> &[SubgroupG] {
        self.classes.get_or_init(|| self.g.abelian_subgroups())
    }

    pub fn exponent(&self, h: &SubgroupG) -> u64 {
        self.g.exponent(h)
    }

    /// All characters of `H`, sorted.
    pub fn characters(&self, h: &SubgroupG) -> Result<Vec<Values>> {
        let (a, coords) = self.g.abelian_structure(h)?;
        let mut out: Vec<Values> = a
            .elements()
            .iter()
            .map(|chi| coords.iter().map(|c| a.pairing(chi, c)).collect())
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn is_character(&self, h: &SubgroupG, v: &[u64]) -> bool {
        let e = self.exponent(h);
        if v.len() != h.order() || v.iter().any(|&x| x >= e) || v[0] != 0 {
            return false;
        }
        self.g.small_gens(h).iter().all(|&a| {
            let va = v[h.position(a).expect("generator in H")];
            h.elems()
                .iter()
                .enumerate()
                .all(|(p, &x)| v[h.position(self.g.mul(x, a)).expect("closed")] == (v[p] + va) % e)
        })
    }

    /// Whether the characters have trivial common kernel.
    pub fn generates(&self, h: &SubgroupG, beta: &[Values]) -> bool {
        (1..h.order()).all(|p| beta.iter().any(|v| v[p] != 0))
    }

    /// Restriction of a character of `H` to a subgroup `K`.
    pub fn restrict(&self, h: &SubgroupG, e_h: u64, v: &[u64], k: &SubgroupG) -> Values {
        let ratio = e_h / self.exponent(k);
        k.elems().iter().map(|&y| v[h.position(y).expect("K inside H")] / ratio).collect()
    }

    /// `{x in H : a(x) = b(x)}`.
    pub fn kernel_diff(&self, h: &SubgroupG, a: &[u64], b: &[u64]) -> SubgroupG {
        SubgroupG::from_elems(
            h.elems().iter().enumerate().filter(|&(p, _)| a[p] == b[p]).map(|(_, &x)| x).collect(),
        )
    }

    /// Validates `(H, Y_0, β)` and returns its canonical form.
    pub fn canon_c(&self, h: &SubgroupG, y0: &SubgroupG, beta: Vec<Values>, n: usize) -> Result<CSymbol> {
        if !self.g.is_subgroup(h) {
            return Err(Error::InvalidGroup("H is not a subgroup".into()));
        }
        if !self.g.is_abelian_sub(h) {
            return Err(Error::NotAbelian);
        }
        if !self.g.is_subgroup(y0) || !h.is_subset_of(y0) || !y0.is_subset_of(&self.g.centralizer(h)) {
            return Err(Error::YNotInCentralizerQuotient);
        }
        if beta.len() > n {
            return Err(Error::TooLong(beta.len()));
        }
        if let Some(bad) = beta.iter().find(|v| !self.is_character(h, v)) {
            return Err(Error::Invalid(format!("{bad:?} is not a character of H")));
        }
        if !self.generates(h, &beta) {
            return Err(Error::NotGenerating);
        }
        Ok(self.canon_raw(h, y0, beta))
    }

    fn build(&self, h: SubgroupG, y0: SubgroupG, mut beta: Vec<Values>) -> CSymbol {
        beta.sort();
        let y_reps = self.g.coset_reps(&y0, &h);
        let exp = self.exponent(&h);
        CSymbol { h_order: h.order(), h, y_reps, beta, exp, y0 }
    }

    fn conjugate_parts(
        &self,
        h: &SubgroupG,
        y0: &SubgroupG,
        beta: &[Values],
        g: ElemId,
    ) -> (SubgroupG, SubgroupG, Vec<Values>) {
        let mut pairs: Vec<(ElemId, usize)> =
            h.elems().iter().enumerate().map(|(i, &x)| (self.g.conj(x, g), i)).collect();
        pairs.sort_unstable();
        let h2 = SubgroupG::from_elems(pairs.iter().map(|p| p.0).collect());
        let beta2 = beta.iter().map(|v| pairs.iter().map(|&(_, i)| v[i]).collect()).collect();
        (h2, self.g.conjugate(y0, g), beta2)
    }

    /// Canonical form by minimizing over all conjugates; inputs are trusted.
    pub(crate) fn canon_raw(&self, h: &SubgroupG, y0: &SubgroupG, beta: Vec<Values>) -> CSymbol {
        if self.is_abelian() {
            return self.build(h.clone(), y0.clone(), beta);
        }
        let conj_h: Vec<(SubgroupG, ElemId)> =
            (0..self.g.order() as ElemId).map(|g| (self.g.conjugate(h, g), g)).collect();
        let best = conj_h.iter().map(|(c, _)| c).min().expect("nonempty group").clone();
        conj_h
            .iter()
            .filter(|(c, _)| *c == best)
            .map(|&(_, g)| {
                let (h2, y2, b2) = self.conjugate_parts(h, y0, &beta, g);
                self.build(h2, y2, b2)
            })
            .min()
            .expect("at least one minimizer")
    }

    /// `g`-conjugate of a canonical symbol, not re-canonicalized.
    pub fn conjugate(&self, s: &CSymbol, g: ElemId) -> (SubgroupG, SubgroupG, Vec<Values>) {
        self.conjugate_parts(&s.h, &s.y0, &s.beta, g)
    }

    fn check_pair(s: &CSymbol, i: usize, j: usize) -> Result<()> {
        let n = s.len();
        if i == j || i >= n || j >= n {
            return Err(Error::BadIndex(format!("pair ({i},{j}) for length {n}")));
        }
        Ok(())
    }

    /// Right-hand side of the blow-up relation at positions `i != j`.
    pub fn expand_b(&self, s: &CSymbol, i: usize, j: usize) -> Result<ClassVector<CSymbol>> {
        Ok(ClassVector::from_terms(self.expand_b_terms(s, i, j)?.into_iter().map(|t| (t, 1))))
    }

    /// The three terms `(H,Y,β_1)`, `(H,Y,β_2)`, `(H̄,Ȳ,β̄)`, in that order.
    pub fn expand_b_terms(&self, s: &CSymbol, i: usize, j: usize) -> Result<[CSymbol; 3]> {
        Self::check_pair(s, i, j)?;
        let e = s.exp;
        let (bi, bj) = (&s.beta[i], &s.beta[j]);
        let diff = |a: &Values, b: &Values| -> Values { a.iter().zip(b).map(|(x, y)| (x + e - y) % e).collect() };
        let mut beta1 = s.beta.clone();
        beta1[i] = diff(bi, bj);
        let mut beta2 = s.beta.clone();
        beta2[j] = diff(bj, bi);
        let hbar = self.kernel_diff(&s.h, bi, bj);
        let bar: Vec<Values> = s
            .beta
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, v)| self.restrict(&s.h, e, v, &hbar))
            .collect();
        Ok([
            self.canon_raw(&s.h, &s.y0, beta1),
            self.canon_raw(&s.h, &s.y0, beta2),
            self.canon_raw(&hbar, &s.y0, bar),
        ])
    }

    /// Terms of the codimension-`j` relation for the chosen positions, each with `|I|`.
    ///
    /// For `∅ ≠ I ⊆ positions`, the term lives over `H_I`, the locus where the
    /// `b_i, i ∈ I` agree; its characters are the common value `b̄`, the differences
    /// `b_k − b̄` for the other chosen positions, and the unchosen characters, all
    /// restricted to `H_I`.
    pub fn codimj_terms(&self, s: &CSymbol, positions: &[usize]) -> Result<Vec<(CSymbol, usize)>> {
        let j = positions.len();
        let distinct: BTreeSet<usize> = positions.iter().copied().collect();
        if j < 2 || distinct.len() != j || positions.iter().any(|&p| p >= s.len()) {
            return Err(Error::BadIndex(format!("positions {positions:?} for length {}", s.len())));
        }
        let e = s.exp;
        let mut out = Vec::with_capacity((1 << j) - 1);
        for mask in 1u32..(1 << j) {
            let chosen: Vec<usize> = (0..j).filter(|t| mask >> t & 1 == 1).map(|t| positions[t]).collect();
            let i0 = chosen[0];
            let b0 = &s.beta[i0];
            let hi = SubgroupG::from_elems(
                s.h.elems()
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| chosen.iter().all(|&i| s.beta[i][p] == b0[p]))
                    .map(|(_, &x)| x)
                    .collect(),
            );
            let mut beta = vec![self.restrict(&s.h, e, b0, &hi)];
            for (k, v) in s.beta.iter().enumerate() {
                if chosen.contains(&k) {
                    continue;
                }
                if distinct.contains(&k) {
                    let d: Values = v.iter().zip(b0).map(|(x, y)| (x + e - y) % e).collect();
                    beta.push(self.restrict(&s.h, e, &d, &hi));
                } else {
                    beta.push(self.restrict(&s.h, e, v, &hi));
                }
            }
            out.push((self.canon_raw(&hi, &s.y0, beta), chosen.len()));
        }
        Ok(out)
    }

    pub fn expand_codimj(&self, s: &CSymbol, positions: &[usize]) -> Result<ClassVector<CSymbol>> {
        Ok(ClassVector::from_terms(self.codimj_terms(s, positions)?.into_iter().map(|(t, _)| (t, 1))))
    }

    /// Every canonical symbol with `|β| <= n`, zero characters included, sorted.
    pub fn enumerate(&self, n: usize) -> Result<Vec<CSymbol>> {
        self.enumerate_lengths(0..=n)
    }

    pub fn enumerate_lengths(&self, lengths: impl Iterator<Item = usize> + Clone) -> Result<Vec<CSymbol>> {
        let mut out = BTreeSet::new();
        for h in self.abelian_classes() {
            let chars = self.characters(h)?;
            let y0s = self.g.subgroups_between(h, &self.g.centralizer(h));
            for len in lengths.clone() {
                for ms in multisets(chars.len(), len) {
                    let beta: Vec<Values> = ms.iter().map(|&i| chars[i].clone()).collect();
                    if !self.generates(h, &beta) {
                        continue;
                    }
                    for y0 in &y0s {
                        out.insert(self.canon_raw(h, y0, beta.clone()));
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Values on all of `G` of a coordinate character (abelian `G` only).
    pub fn values_from_coords(&self, chi: &Character) -> Result<Values> {
        let a = self.abelian.as_ref().ok_or(Error::NotAbelian)?;
        Ok(a.coords.iter().map(|c| a.group.pairing(chi, c)).collect())
    }

    /// Coordinate form of a character of all of `G` (abelian `G` only).
    pub fn coords_from_values(&self, v: &[u64]) -> Result<Character> {
        let a = self.abelian.as_ref().ok_or(Error::NotAbelian)?;
        let e = a.group.exponent();
        Ok(AbElem(
            (0..a.group.rank())
                .map(|i| {
                    let id = a.ids[&a.group.unit(i)];
                    v[id as usize] / (e / a.group.orders()[i])
                })
                .collect(),
        ))
    }

    /// Image in `B_n(G)` for abelian `G`: symbols over proper subgroups map to zero,
    /// the others to their characters padded with zeros.
    pub fn project_bg(&self, s: &CSymbol, n: usize) -> Result<Option<BSymbol>> {
        let a = self.abelian.as_ref().ok_or(Error::NotAbelian)?;
        if s.len() > n {
            return Err(Error::TooLong(s.len()));
        }
        if s.h.order() != self.g.order() {
            return Ok(None);
        }
        let mut beta = s.beta.iter().map(|v| self.coords_from_values(v)).collect::<Result<Vec<_>>>()?;
        beta.extend(std::iter::repeat(a.group.zero()).take(n - s.len()));
        canon_b(&a.group, beta).map(Some)
    }

    /// Human-readable form using coordinates (abelian) or one-line permutations.
    pub fn describe(&self, s: &CSymbol) -> String {
        let el = |x: ElemId| match self.coords_of(x) {
            Some(c) => c.to_string(),
            None => format!("{:?}", self.g.element(x).0),
        };
        let list = |xs: &[ElemId]| xs.iter().map(|&x| el(x)).collect::<Vec<_>>().join(",");
        let beta: Vec<String> = s
            .beta
            .iter()
            .map(|v| match (s.h.order() == self.g.order(), self.coords_from_values(v)) {
                (true, Ok(c)) => c.to_string(),
                _ => format!("<{}>", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")),
            })
            .collect();
        format!("(H={{{}}}, Y={{{}}}, ({}))", list(s.h.elems()), list(&s.y_reps), beta.join(","))
    }
}

impl AbelianData {
    fn new(group: FinAbGroup, coords: Vec<AbElem>) -> Self {
        let ids = coords.iter().enumerate().map(|(i, c)| (c.clone(), i as ElemId)).collect();
        AbelianData { group, coords, ids }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::grp::Perm;
    use proptest::prelude::*;

    pub(crate) fn ctx_s3() -> CContext {
        let g = PermGroup::generate(
            3,
            vec![Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(), Perm::from_cycles(3, &[&[0, 1]]).unwrap()],
        )
        .unwrap();
        CContext::new(g).unwrap()
    }

    pub(crate) fn ctx_d4() -> CContext {
        let g = PermGroup::generate(
            4,
            vec![Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(), Perm::from_cycles(4, &[&[1, 3]]).unwrap()],
        )
        .unwrap();
        CContext::new(g).unwrap()
    }

    fn cyc(n: u64) -> CContext {
        CContext::from_abelian(&FinAbGroup::cyclic(n)).unwrap()
    }

    /// `(G, 1, β)` over an abelian context from coordinate characters.
    pub(crate) fn top(ctx: &CContext, chars: &[u64]) -> CSymbol {
        let g = ctx.group().whole();
        let beta = chars.iter().map(|&c| ctx.values_from_coords(&AbElem(vec![c])).unwrap()).collect();
        ctx.canon_c(&g, &g, beta, 8).unwrap()
    }

    #[test]
    fn abelian_canonicalization_is_sorting() {
        let ctx = cyc(5);
        assert_eq!(top(&ctx, &[3, 1]), top(&ctx, &[1, 3]));
        assert_eq!(ctx.describe(&top(&ctx, &[3, 1])), "(H={0,1,2,3,4}, Y={0}, (1,3))");
    }

    #[test]
    fn conjugate_inputs_collide() {
        let ctx = ctx_s3();
        let g = ctx.group();
        let t12 = g.id_of(&Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let t13 = g.id_of(&Perm::from_cycles(3, &[&[0, 2]]).unwrap()).unwrap();
        let h1 = g.closure(&[t12]);
        let h2 = g.closure(&[t13]);
        let faithful = |h: &SubgroupG| -> Values { h.elems().iter().map(|&x| u64::from(x != 0)).collect() };
        let a = ctx.canon_c(&h1, &h1, vec![faithful(&h1)], 1).unwrap();
        let b = ctx.canon_c(&h2, &h2, vec![faithful(&h2)], 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(ctx.canon_raw(a.h(), a.y0(), a.beta().to_vec()), a);
    }

    #[test]
    fn canon_errors() {
        let ctx = ctx_s3();
        let g = ctx.group();
        let whole = g.whole();
        assert_eq!(ctx.canon_c(&whole, &whole, vec![], 1).unwrap_err(), Error::NotAbelian);
        let t12 = g.id_of(&Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let h = g.closure(&[t12]);
        assert_eq!(ctx.canon_c(&h, &whole, vec![vec![0, 1]], 1).unwrap_err(), Error::YNotInCentralizerQuotient);
        assert_eq!(ctx.canon_c(&h, &h, vec![vec![0, 0]], 1).unwrap_err(), Error::NotGenerating);
        assert_eq!(ctx.canon_c(&h, &h, vec![vec![0, 1]; 2], 1).unwrap_err(), Error::TooLong(2));
        assert!(matches!(ctx.canon_c(&h, &h, vec![vec![1, 1]], 1), Err(Error::Invalid(_))));
    }

    #[test]
    fn expand_examples() {
        let ctx = cyc(2);
        let s = top(&ctx, &[1, 1]);
        let [t1, t2, bar] = ctx.expand_b_terms(&s, 0, 1).unwrap();
        assert_eq!(t1, top(&ctx, &[0, 1]));
        assert_eq!(t2, top(&ctx, &[0, 1]));
        assert_eq!(bar, top(&ctx, &[1]));

        let ctx = cyc(4);
        let s = top(&ctx, &[1, 3]);
        let [t1, t2, bar] = ctx.expand_b_terms(&s, 0, 1).unwrap();
        assert_eq!(t1, top(&ctx, &[2, 3]));
        assert_eq!(t2, top(&ctx, &[1, 2]));
        assert_eq!(bar.h().order(), 2);
        assert_eq!(bar.beta(), &[vec![0, 1]]);
        assert_eq!(bar.y0().order(), 4);
        assert!(matches!(ctx.expand_b(&s, 0, 0), Err(Error::BadIndex(_))));
    }

    #[test]
    fn codim2_matches_blowup() {
        for ctx in [cyc(4), cyc(6), ctx_s3(), ctx_d4()] {
            for s in ctx.enumerate_lengths(2..=3).unwrap() {
                for (i, j) in [(0, 1), (1, 0)] {
                    assert_eq!(ctx.expand_codimj(&s, &[i, j]).unwrap(), ctx.expand_b(&s, i, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn codim3_has_seven_terms() {
        let ctx = cyc(2);
        let s = top(&ctx, &[1, 1, 1]);
        let terms = ctx.codimj_terms(&s, &[0, 1, 2]).unwrap();
        assert_eq!(terms.len(), 7);
        assert_eq!(terms.iter().filter(|(_, k)| *k == 3).count(), 1);
        assert!(matches!(ctx.codimj_terms(&s, &[0, 0, 1]), Err(Error::BadIndex(_))));
    }

    #[test]
    fn generation_survives_expansion() {
        for ctx in [cyc(6), CContext::from_abelian(&FinAbGroup::new(vec![2, 2]).unwrap()).unwrap(), ctx_d4()] {
            for s in ctx.enumerate_lengths(2..=2).unwrap() {
                for t in ctx.expand_b_terms(&s, 0, 1).unwrap() {
                    assert!(ctx.generates(t.h(), t.beta()));
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let triv = CContext::from_abelian(&FinAbGroup::trivial()).unwrap();
        let syms = triv.enumerate(1).unwrap();
        let live: Vec<_> = syms.iter().filter(|s| !s.vanish_v()).collect();
        assert_eq!(live.len(), 1);
        assert!(live[0].is_empty());

        let z2 = cyc(2);
        let syms = z2.enumerate(1).unwrap();
        let live: Vec<_> = syms.iter().filter(|s| !s.vanish_v()).collect();
        assert_eq!(live.len(), 3);
        assert_eq!(syms.len(), 5);
    }

    #[test]
    fn enumeration_regression_s3() {
        let ctx = ctx_s3();
        let syms = ctx.enumerate(2).unwrap();
        let live = syms.iter().filter(|s| !s.vanish_v()).count();
        // H = 1: 4 classes of Y times β in {(), (0), (0,0)}; H = C_2: (1), (0,1), (1,1);
        // H = C_3 with χ ~ χ^2: (χ), (0,χ), (χ,χ), (χ,χ^2)
        assert_eq!((syms.len(), live), (19, 9));
    }

    #[test]
    fn projection_to_b() {
        let ctx = cyc(2);
        let s = top(&ctx, &[1]);
        let b = ctx.project_bg(&s, 2).unwrap().unwrap();
        assert_eq!(b.to_string(), "(0,1)");
        let triv = SubgroupG::trivial();
        let low = ctx.canon_c(&triv, &triv, vec![], 2).unwrap();
        assert_eq!(ctx.project_bg(&low, 2).unwrap(), None);
        assert_eq!(ctx_s3().project_bg(&low, 2).unwrap_err(), Error::NotAbelian);
    }

    #[test]
    fn sumzero_and_orders() {
        let ctx = cyc(5);
        assert!(top(&ctx, &[1, 4]).vanish_sumzero().unwrap());
        assert!(!top(&ctx, &[1, 1]).vanish_sumzero().unwrap());
        let ctx = cyc(6);
        assert_eq!(top(&ctx, &[2, 3]).char_orders(), vec![3, 2]);
    }

    proptest! {
        #[test]
        fn random_conjugates_collide(sym_idx in 0usize..1000, g in 0u32..8) {
            let ctx = ctx_d4();
            let syms = ctx.enumerate(2).unwrap();
            let s = &syms[sym_idx % syms.len()];
            let (h, y0, beta) = ctx.conjugate(s, g);
            prop_assert_eq!(&ctx.canon_c(&h, &y0, beta, 2).unwrap(), s);
        }
    }
}
