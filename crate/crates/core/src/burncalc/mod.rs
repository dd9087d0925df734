//! Presentations of the symbol groups as finitely generated abelian groups.
//!
//! [`present_b`] and [`present_bc`] enumerate canonical symbols, emit one relation
//! row per instance of the vanishing and blow-up relations, and hand the matrix to
//! [`Presentation`], which decides equality of classes with certificates.

pub mod cache;
mod filter;
mod presentation;

use std::collections::HashMap;
use std::hash::Hash;

use num_integer::binomial;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub use filter::GFilter;
pub use presentation::{Data, Flavor, Header, ImageCoord, Presentation, SparseRow, Verdict, MAX_BASIS, MAX_ROWS};

use crate::abgrp::FinAbGroup;
use crate::error::{Error, Result};
use crate::grp::SubgroupG;
use crate::symb::{canon_b, expand_b, BSymbol, CContext, CSymbol, ClassVector, KSymbol};

/// Every `n`-element multiset of characters of `h` that generates `h^∨`, sorted.
pub fn enumerate_b(h: &FinAbGroup, n: usize) -> Result<Vec<BSymbol>> {
    let chars = h.elements();
    let size = binomial(chars.len() + n, n);
    if size > MAX_BASIS * 16 {
        return Err(Error::SizeCapExceeded { what: "candidate multisets", size, cap: MAX_BASIS * 16 });
    }
    let mut out: Vec<BSymbol> = crate::symb::multisets(chars.len(), n)
        .into_par_iter()
        .filter_map(|ms| canon_b(h, ms.iter().map(|&i| chars[i].clone()).collect()).ok())
        .collect();
    out.sort();
    if out.len() > MAX_BASIS {
        return Err(Error::SizeCapExceeded { what: "basis", size: out.len(), cap: MAX_BASIS });
    }
    Ok(out)
}

/// Identifier for a finite abelian group given by its invariant factors.
pub fn abelian_key(h: &FinAbGroup) -> String {
    format!("abelian:{:?}", h.orders())
}

/// Identifier for a permutation group, hashed from its generators.
pub fn group_key(ctx: &CContext) -> String {
    let g = ctx.group();
    let mut h = Sha256::new();
    h.update(g.degree().to_le_bytes());
    for p in g.gens() {
        for x in &p.0 {
            h.update(x.to_le_bytes());
        }
        h.update(b";");
    }
    format!("perm:{}", hex::encode(h.finalize()))
}

fn index_of<S: Eq + Hash + std::fmt::Debug>(index: &HashMap<S, usize>, s: &S) -> Result<usize> {
    index.get(s).copied().ok_or_else(|| Error::UnknownSymbol(format!("{s:?}")))
}

/// `s - e` as a sparse row.
fn relation_row<S: Clone + Ord + Eq + Hash + std::fmt::Debug>(
    index: &HashMap<S, usize>,
    s: &S,
    e: &ClassVector<S>,
) -> Result<SparseRow> {
    let mut row = vec![(index_of(index, s)?, 1)];
    for (t, k) in e.iter() {
        row.push((index_of(index, t)?, -k));
    }
    Ok(row)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// `B_n(h)`: one row per blow-up relation instance.
pub fn present_b(h: &FinAbGroup, n: usize) -> Result<Presentation<BSymbol>> {
    let basis = enumerate_b(h, n)?;
    let rows = b_rows(h, &basis)?;
    Presentation::new(header_b(h, n), basis, rows)
}

pub fn header_b(h: &FinAbGroup, n: usize) -> Header {
    Header { flavor: Flavor::B, group: abelian_key(h), n, filter: None }
}

pub fn header_bc(ctx: &CContext, n: usize, filter: Option<&GFilter>) -> Header {
    Header { flavor: Flavor::Bc, group: group_key(ctx), n, filter: filter.map(GFilter::hash_hex) }
}

fn b_rows(h: &FinAbGroup, basis: &[BSymbol]) -> Result<Vec<SparseRow>> {
    let index: HashMap<BSymbol, usize> = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let rows: Vec<Vec<SparseRow>> = basis
        .par_iter()
        .map(|s| pairs(s.n()).map(|(i, j)| relation_row(&index, s, &expand_b(h, s, i, j)?)).collect())
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// `BC_n(G)`, or its quotient by the symbols whose pair lies outside `filter`.
pub fn present_bc(ctx: &CContext, n: usize, filter: Option<&GFilter>) -> Result<Presentation<CSymbol>> {
    let basis = ctx.enumerate(n)?;
    if basis.len() > MAX_BASIS {
        return Err(Error::SizeCapExceeded { what: "basis", size: basis.len(), cap: MAX_BASIS });
    }
    let index: HashMap<CSymbol, usize> = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let rows: Vec<Vec<SparseRow>> = basis
        .par_iter()
        .enumerate()
        .map(|(c, s)| {
            let mut out = Vec::new();
            if s.vanish_v() {
                out.push(vec![(c, 1)]);
            }
            if let Some(f) = filter {
                let (h, y0) = s.pair();
                if !f.contains(h, y0) {
                    out.push(vec![(c, 1)]);
                }
            }
            for (i, j) in pairs(s.len()) {
                out.push(relation_row(&index, s, &ctx.expand_b(s, i, j)?)?);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Presentation::new(header_bc(ctx, n, filter), basis, rows.into_iter().flatten().collect())
}

/// Outcome of comparing two classes of field-decorated symbols.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum BurnVerdict {
    Equal,
    /// The images under the forgetful map already differ.
    Distinct { image: Vec<ImageCoord> },
    Unknown,
}

fn vanishes(s: &KSymbol) -> bool {
    s.vanish_v() || s.vanish_sumzero().unwrap_or(false) || s.vanish_stable().unwrap_or(false)
}

/// Conservative equality of classes of field-decorated symbols.
///
/// Terms covered by a vanishing rule are dropped. What remains is `Equal` if it agrees
/// term by term, `Distinct` if the forgetful images differ in `bc`, and `Unknown`
/// otherwise.
pub fn burn_eq(bc: &Presentation<CSymbol>, u: &ClassVector<KSymbol>, v: &ClassVector<KSymbol>) -> Result<BurnVerdict> {
    let u = u.filter(|s| !vanishes(s));
    let v = v.filter(|s| !vanishes(s));
    if u == v {
        return Ok(BurnVerdict::Equal);
    }
    let forget = |c: &ClassVector<KSymbol>| c.map(|s| Some(s.forget()));
    match bc.class_eq(&forget(&u), &forget(&v))? {
        Verdict::Distinct { image } => Ok(BurnVerdict::Distinct { image }),
        Verdict::Equal { .. } => Ok(BurnVerdict::Unknown),
    }
}

/// Comparison of `BC_n^G(G)` with `B_n(G)` for abelian `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BcgReport {
    pub b_invariants: (usize, Vec<num_bigint::BigInt>),
    pub bc_invariants: (usize, Vec<num_bigint::BigInt>),
    /// Every filtered BC relation maps into the B relation lattice.
    pub forward_ok: bool,
    /// Every B relation maps into the filtered BC relation lattice.
    pub backward_ok: bool,
    /// The symbol maps are mutually inverse on the surviving generators.
    pub roundtrip_ok: bool,
}

impl BcgReport {
    pub fn matches(&self) -> bool {
        self.b_invariants == self.bc_invariants && self.forward_ok && self.backward_ok && self.roundtrip_ok
    }
}

/// Presents both groups independently and transports relations along
/// `(G, 1, β) ↦ β` padded with zeros, and `β ↦ (G, 1, nonzero part of β)`.
pub fn bc_g_equals_b(ctx: &CContext, n: usize) -> Result<BcgReport> {
    let a = ctx.abelian_group().ok_or(Error::NotAbelian)?.clone();
    let filter = GFilter::top(ctx)?;
    let bc = present_bc(ctx, n, Some(&filter))?;
    let b = present_b(&a, n)?;
    let whole = ctx.group().whole();
    let order = whole.order();

    let phi = |s: &CSymbol| -> Result<Option<BSymbol>> {
        if s.h().order() != order || s.vanish_v() {
            return Ok(None);
        }
        ctx.project_bg(s, n)
    };
    let psi = |s: &BSymbol| -> Result<CSymbol> {
        let beta = s
            .beta()
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| ctx.values_from_coords(c))
            .collect::<Result<Vec<_>>>()?;
        ctx.canon_c(&whole, &whole, beta, n)
    };

    let phi_img: Vec<Option<usize>> = bc
        .basis()
        .iter()
        .map(|s| Ok(phi(s)?.map(|t| b.index_of(&t).ok_or_else(|| Error::UnknownSymbol(t.to_string()))).transpose()?))
        .collect::<Result<_>>()?;
    let psi_img: Vec<usize> = b
        .basis()
        .iter()
        .map(|s| {
            let t = psi(s)?;
            bc.index_of(&t).ok_or_else(|| Error::UnknownSymbol(t.to_string()))
        })
        .collect::<Result<_>>()?;

    let forward_ok = bc.relations().par_iter().all(|row| {
        let img: SparseRow = row.iter().filter_map(|&(c, k)| phi_img[c].map(|t| (t, k))).collect();
        b.contains(&img)
    });
    let backward_ok = b.relations().par_iter().all(|row| {
        let img: SparseRow = row.iter().map(|&(c, k)| (psi_img[c], k)).collect();
        bc.contains(&img)
    });
    let b_round = psi_img.iter().enumerate().all(|(i, &c)| phi_img[c] == Some(i));
    let bc_round = bc.basis().iter().enumerate().all(|(c, s)| {
        let (h, y0) = s.pair();
        if !filter.contains(h, y0) || s.vanish_v() {
            return true;
        }
        phi_img[c].is_some_and(|i| psi_img[i] == c)
    });

    Ok(BcgReport {
        b_invariants: b.invariants(),
        bc_invariants: bc.invariants(),
        forward_ok,
        backward_ok,
        roundtrip_ok: b_round && bc_round,
    })
}

/// Outcome of an exhaustive lattice check: how many instances were examined and
/// the symbols where one failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport<S> {
    pub checked: usize,
    pub failures: Vec<S>,
}

impl<S> CheckReport<S> {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn confluence<S, L, F>(p: &Presentation<S>, len: L, expand: F) -> Result<CheckReport<S>>
where
    S: Clone + Ord + Eq + Hash + std::fmt::Debug + Send + Sync,
    L: Fn(&S) -> usize + Sync,
    F: Fn(&S, usize, usize) -> Result<ClassVector<S>> + Sync,
{
    let results: Vec<(usize, Option<S>)> = p
        .basis()
        .par_iter()
        .map(|s| {
            let exps = pairs(len(s)).map(|(i, j)| expand(s, i, j)).collect::<Result<Vec<_>>>()?;
            let mut ok = true;
            for e in exps.iter().skip(1) {
                ok &= p.contains(&p.vector(&e.minus(&exps[0]))?);
            }
            Ok((exps.len().saturating_sub(1), (!ok).then(|| s.clone())))
        })
        .collect::<Result<_>>()?;
    Ok(CheckReport {
        checked: results.iter().map(|r| r.0).sum(),
        failures: results.into_iter().filter_map(|r| r.1).collect(),
    })
}

/// Blow-up expansions of each symbol of `p` at different index pairs agree modulo
/// the relation lattice.
pub fn confluence_b(h: &FinAbGroup, p: &Presentation<BSymbol>) -> Result<CheckReport<BSymbol>> {
    confluence(p, BSymbol::n, |s, i, j| expand_b(h, s, i, j))
}

pub fn confluence_bc(ctx: &CContext, p: &Presentation<CSymbol>) -> Result<CheckReport<CSymbol>> {
    confluence(p, CSymbol::len, |s, i, j| ctx.expand_b(s, i, j))
}

/// Every basis symbol with a zero-sum sub-multiset lies in the relation lattice.
pub fn sumzero_check(p: &Presentation<CSymbol>) -> Result<CheckReport<CSymbol>> {
    let hits: Vec<(usize, &CSymbol)> = p
        .basis()
        .iter()
        .enumerate()
        .filter_map(|(c, s)| match s.vanish_sumzero() {
            Ok(true) => Some(Ok((c, s))),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_>>()?;
    let failures = hits.par_iter().filter(|(c, _)| !p.contains(&[(*c, 1)])).map(|(_, s)| (*s).clone()).collect();
    Ok(CheckReport { checked: hits.len(), failures })
}

/// Every codimension-`j` relation row of a basis symbol lies in the lattice of `p`.
pub fn codimj_check(ctx: &CContext, p: &Presentation<CSymbol>, j: usize) -> Result<CheckReport<CSymbol>> {
    let results: Vec<(usize, Option<CSymbol>)> = p
        .basis()
        .par_iter()
        .filter(|s| s.len() >= j)
        .map(|s| {
            let mut checked = 0;
            let mut ok = true;
            for positions in crate::abgrp::index_subsets(s.len(), j) {
                let row = ClassVector::single(s.clone()).minus(&ctx.expand_codimj(s, &positions)?);
                ok &= p.contains(&p.vector(&row)?);
                checked += 1;
            }
            Ok((checked, (!ok).then(|| s.clone())))
        })
        .collect::<Result<_>>()?;
    Ok(CheckReport {
        checked: results.iter().map(|r| r.0).sum(),
        failures: results.into_iter().filter_map(|r| r.1).collect(),
    })
}

/// Filter made of all pairs `(H, Y_0)` with `H` in `hs` up to conjugacy.
pub fn filter_from_subgroups(ctx: &CContext, hs: &[SubgroupG]) -> Result<GFilter> {
    let g = ctx.group();
    let pairs = hs.iter().flat_map(|h| {
        g.subgroups_between(h, &g.centralizer(h)).into_iter().map(move |y0| (h.clone(), y0))
    });
    GFilter::generated_by(ctx, pairs)
}
