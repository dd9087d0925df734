//! Finite groups given by permutation generators, fully materialized.
//!
//! Elements are numbered by their position in the lexicographically sorted list of
//! one-line permutation arrays, so the identity is always element `0` and sorting
//! element ids sorts the permutations. Products are read left to right:
//! `mul(a, b)` applies `a` first.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::abgrp::{AbElem, FinAbGroup};
use crate::error::{Error, Result};
use crate::zlat::{self, IntMatrix};

pub type ElemId = u32;

pub const DEFAULT_ORDER_CAP: usize = 20_000;

// Multiplication tables are kept for groups up to this order.
const TABLE_LIMIT: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u32).collect())
    }

    pub fn from_one_line(degree: usize, images: &[u32]) -> Result<Perm> {
        if images.len() != degree {
            return Err(Error::InvalidPermutation(format!(
                "{images:?} has length {} instead of degree {degree}",
                images.len()
            )));
        }
        let mut seen = vec![false; degree];
        for &x in images {
            if x as usize >= degree || std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Perm(images.to_vec()))
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Perm> {
        let mut p: Vec<u32> = (0..degree as u32).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                let y = c[(k + 1) % c.len()];
                if x as usize >= degree || y as usize >= degree {
                    return Err(Error::InvalidPermutation(format!("cycle {c:?} out of range")));
                }
                p[x as usize] = y;
            }
        }
        Perm::from_one_line(degree, &p)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }
}

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, ElemId>,
    inverse: Vec<ElemId>,
    orders: Vec<u32>,
    table: Option<Vec<ElemId>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("gens", &self.gens)
            .finish()
    }
}

/// A subgroup of a [`PermGroup`], as a sorted list of element ids of the parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubgroupG {
    elems: Vec<ElemId>,
}

impl SubgroupG {
    pub fn trivial() -> Self {
        SubgroupG { elems: vec![0] }
    }

    /// Trusts the caller that `elems` is closed; sorts and dedups.
    pub fn from_elems(mut elems: Vec<ElemId>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        SubgroupG { elems }
    }

    pub fn elems(&self) -> &[ElemId] {
        &self.elems
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, x: ElemId) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// Position of `x` in the sorted element list.
    pub fn position(&self, x: ElemId) -> Option<usize> {
        self.elems.binary_search(&x).ok()
    }

    pub fn is_subset_of(&self, other: &SubgroupG) -> bool {
        self.elems.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }
}

/// `base / normal` as an explicit coset table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGroup {
    pub base: SubgroupG,
    pub normal: SubgroupG,
    /// Minimal element of each coset, sorted; index 0 is the identity coset.
    pub reps: Vec<ElemId>,
    /// `table[i][j]` is the coset index of `reps[i] * reps[j]`.
    pub table: Vec<Vec<usize>>,
}

impl QuotientGroup {
    pub fn order(&self) -> usize {
        self.reps.len()
    }
}

impl PermGroup {
    pub fn generate(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        Self::generate_capped(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn generate_capped(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::InvalidGroup("degree must be at least 1".into()));
        }
        for g in &gens {
            Perm::from_one_line(degree, &g.0)?;
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    frontier.push(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        let index: HashMap<Perm, ElemId> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as ElemId)).collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut grp = PermGroup { degree, gens, elements, index, inverse, orders: vec![], table: None };
        if grp.order() <= TABLE_LIMIT {
            let n = grp.order();
            let mut t = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    t.push(grp.index[&grp.elements[a].then(&grp.elements[b])]);
                }
            }
            grp.table = Some(t);
        }
        grp.orders = (0..grp.order() as ElemId).map(|x| grp.compute_order(x)).collect();
        Ok(grp)
    }

    /// Regular representation of a finite abelian group, with the coordinates of
    /// each element id.
    pub fn regular(a: &FinAbGroup) -> Result<(PermGroup, Vec<AbElem>)> {
        let elems = a.elements();
        let n = elems.len();
        if n.saturating_mul(n) > 50_000_000 {
            return Err(Error::CapExceeded { cap: 7_000 });
        }
        let pos: HashMap<&AbElem, u32> = elems.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let gens: Vec<Perm> = (0..a.rank())
            .map(|i| {
                let u = a.unit(i);
                Perm(elems.iter().map(|x| pos[&a.add(x, &u)]).collect())
            })
            .collect();
        let g = PermGroup::generate_capped(n, gens, n.max(1))?;
        // translation by a sends the zero element (index 0) to a
        let coords = g.elements.iter().map(|p| elems[p.0[0] as usize].clone()).collect();
        Ok((g, coords))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, x: ElemId) -> &Perm {
        &self.elements[x as usize]
    }

    pub fn id_of(&self, p: &Perm) -> Option<ElemId> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.table {
            Some(t) => t[a as usize * self.order() + b as usize],
            None => self.index[&self.elements[a as usize].then(&self.elements[b as usize])],
        }
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inverse[a as usize]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: ElemId, g: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn elem_order(&self, x: ElemId) -> u32 {
        self.orders[x as usize]
    }

    fn compute_order(&self, x: ElemId) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn commute(&self, a: ElemId, b: ElemId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn whole(&self) -> SubgroupG {
        SubgroupG { elems: (0..self.order() as ElemId).collect() }
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian_sub(&self.whole())
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[ElemId]) -> SubgroupG {
        let mut seen: HashSet<ElemId> = HashSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
        SubgroupG::from_elems(seen.into_iter().collect())
    }

    /// A small generating set, chosen greedily by decreasing element order.
    pub fn small_gens(&self, s: &SubgroupG) -> Vec<ElemId> {
        let mut by_order: Vec<ElemId> = s.elems.clone();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.elem_order(x)), x));
        let mut gens = Vec::new();
        let mut cur = SubgroupG::trivial();
        for x in by_order {
            if cur.order() == s.order() {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = self.closure(&gens);
            }
        }
        gens
    }

    /// `<s, x>`.
    pub fn extend(&self, s: &SubgroupG, x: ElemId) -> SubgroupG {
        let mut gens = self.small_gens(s);
        gens.push(x);
        self.closure(&gens)
    }

    pub fn is_subgroup(&self, s: &SubgroupG) -> bool {
        s.contains(0)
            && s.elems.iter().all(|&a| s.elems.iter().all(|&b| s.contains(self.mul(a, b))))
    }

    pub fn is_abelian_sub(&self, h: &SubgroupG) -> bool {
        let gens = self.small_gens(h);
        gens.iter().all(|&a| gens.iter().all(|&b| self.commute(a, b)))
    }

    pub fn centralizer(&self, h: &SubgroupG) -> SubgroupG {
        let gens = self.small_gens(h);
        SubgroupG::from_elems(
            (0..self.order() as ElemId)
                .filter(|&g| gens.iter().all(|&x| self.commute(g, x)))
                .collect(),
        )
    }

    pub fn normalizer(&self, h: &SubgroupG) -> SubgroupG {
        let gens = self.small_gens(h);
        SubgroupG::from_elems(
            (0..self.order() as ElemId)
                .filter(|&g| gens.iter().all(|&x| h.contains(self.conj(x, g))))
                .collect(),
        )
    }

    /// `g^-1 H g`.
    pub fn conjugate(&self, h: &SubgroupG, g: ElemId) -> SubgroupG {
        SubgroupG::from_elems(h.elems.iter().map(|&x| self.conj(x, g)).collect())
    }

    /// Lexicographically least conjugate of `h`.
    pub fn canonical_conjugate(&self, h: &SubgroupG) -> SubgroupG {
        (0..self.order() as ElemId)
            .map(|g| self.conjugate(h, g))
            .min()
            .expect("nonempty group")
    }

    pub fn is_normal_in(&self, n: &SubgroupG, base: &SubgroupG) -> bool {
        n.is_subset_of(base)
            && self
                .small_gens(base)
                .iter()
                .all(|&g| n.elems.iter().all(|&x| n.contains(self.conj(x, g))))
    }

    pub fn is_central_in(&self, h: &SubgroupG, d: &SubgroupG) -> bool {
        let hg = self.small_gens(h);
        let dg = self.small_gens(d);
        hg.iter().all(|&a| dg.iter().all(|&b| self.commute(a, b)))
    }

    pub fn quotient(&self, y0: &SubgroupG, h: &SubgroupG) -> Result<QuotientGroup> {
        if !self.is_normal_in(h, y0) {
            return Err(Error::NotNormal);
        }
        let rep_of = |x: ElemId| -> ElemId {
            h.elems.iter().map(|&k| self.mul(x, k)).min().expect("nonempty")
        };
        let reps: Vec<ElemId> =
            y0.elems.iter().map(|&x| rep_of(x)).collect::<BTreeSet<_>>().into_iter().collect();
        let table = reps
            .iter()
            .map(|&a| {
                reps.iter()
                    .map(|&b| reps.binary_search(&rep_of(self.mul(a, b))).expect("closed"))
                    .collect()
            })
            .collect();
        Ok(QuotientGroup { base: y0.clone(), normal: h.clone(), reps, table })
    }

    /// Minimal element of each left coset `xH` of `h` inside `y0`, sorted.
    pub fn coset_reps(&self, y0: &SubgroupG, h: &SubgroupG) -> Vec<ElemId> {
        let mut reps: Vec<ElemId> = y0
            .elems
            .iter()
            .map(|&x| h.elems.iter().map(|&k| self.mul(x, k)).min().expect("nonempty"))
            .collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }

    /// One representative per conjugacy class of abelian subgroups, sorted by
    /// `(order, element list)`; each representative is its least conjugate.
    pub fn abelian_subgroups(&self) -> Vec<SubgroupG> {
        let triv = SubgroupG::trivial();
        let mut reps: BTreeSet<SubgroupG> = BTreeSet::from([triv.clone()]);
        let mut queue = vec![triv];
        while let Some(s) = queue.pop() {
            let c = self.centralizer(&s);
            let gens = self.small_gens(&s);
            let mut seen_here: HashSet<SubgroupG> = HashSet::new();
            for &x in &c.elems {
                if s.contains(x) {
                    continue;
                }
                let mut g = gens.clone();
                g.push(x);
                let t = self.closure(&g);
                if !seen_here.insert(t.clone()) {
                    continue;
                }
                let key = self.canonical_conjugate(&t);
                if reps.insert(key.clone()) {
                    queue.push(key);
                }
            }
        }
        let mut out: Vec<SubgroupG> = reps.into_iter().collect();
        out.sort_by(|a, b| (a.order(), &a.elems).cmp(&(b.order(), &b.elems)));
        out
    }

    /// Every subgroup `S` with `lower <= S <= upper` (not up to conjugacy).
    pub fn subgroups_between(&self, lower: &SubgroupG, upper: &SubgroupG) -> Vec<SubgroupG> {
        let mut found: BTreeSet<SubgroupG> = BTreeSet::from([lower.clone()]);
        let mut queue = vec![lower.clone()];
        while let Some(s) = queue.pop() {
            let gens = self.small_gens(&s);
            for &x in &upper.elems {
                if s.contains(x) {
                    continue;
                }
                let mut g = gens.clone();
                g.push(x);
                let t = self.closure(&g);
                if found.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
        let mut out: Vec<SubgroupG> = found.into_iter().collect();
        out.sort_by(|a, b| (a.order(), &a.elems).cmp(&(b.order(), &b.elems)));
        out
    }

    pub fn exponent(&self, h: &SubgroupG) -> u64 {
        h.elems.iter().fold(1u64, |acc, &x| acc.lcm(&(self.elem_order(x) as u64)))
    }

    /// Invariant-factor structure of an abelian subgroup together with the
    /// coordinates of each of its elements (aligned with `h.elems()`).
    pub fn abelian_structure(&self, h: &SubgroupG) -> Result<(FinAbGroup, Vec<AbElem>)> {
        if !self.is_abelian_sub(h) {
            return Err(Error::NotAbelian);
        }
        let gens = self.small_gens(h);
        let k = gens.len();
        // word coordinates by breadth-first search over the Cayley graph
        let mut coord: HashMap<ElemId, Vec<i64>> = HashMap::from([(0, vec![0; k])]);
        let mut order = vec![0];
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for (j, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if !coord.contains_key(&y) {
                    let mut c = coord[&x].clone();
                    c[j] += 1;
                    coord.insert(y, c);
                    order.push(y);
                }
            }
        }
        let mut rels: BTreeSet<Vec<i64>> = BTreeSet::new();
        for &x in &order {
            for (j, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                let mut r = coord[&x].clone();
                r[j] += 1;
                for (ri, yi) in r.iter_mut().zip(&coord[&y]) {
                    *ri -= yi;
                }
                if r.iter().any(|&v| v != 0) {
                    rels.insert(r);
                }
            }
        }
        let rels: Vec<Vec<i64>> = rels.into_iter().collect();
        let s = zlat::snf_right(&IntMatrix::from_rows(k, &rels));
        let keep: Vec<usize> = (0..k).filter(|&i| s.diag.get(i).map_or(true, |d| *d != BigInt::from(1))).collect();
        let orders: Vec<u64> = keep
            .iter()
            .map(|&i| s.diag.get(i).and_then(|d| d.to_u64()).filter(|&d| d != 0).expect("finite group"))
            .collect();
        let group = FinAbGroup::new(orders)?;
        let coords = h
            .elems
            .iter()
            .map(|x| {
                let c: Vec<BigInt> = coord[x].iter().map(|&v| BigInt::from(v)).collect();
                let y = s.v.left_mul_vec(&c);
                AbElem(
                    keep.iter()
                        .zip(group.orders())
                        .map(|(&i, &d)| y[i].mod_floor(&BigInt::from(d)).to_u64().unwrap())
                        .collect(),
                )
            })
            .collect();
        Ok((group, coords))
    }
}
