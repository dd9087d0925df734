use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symb::ClassVector;
use crate::zlat::{self, Hnf, IntMatrix};

pub const MAX_BASIS: usize = 200_000;
pub const MAX_ROWS: usize = 2_000_000;

/// Sparse integer row over a basis: `(column, coefficient)` sorted by column.
pub type SparseRow = Vec<(usize, i64)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    B,
    Bc,
}

/// Identifies what a presentation presents; also the cache key material.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Header {
    pub flavor: Flavor,
    pub group: String,
    pub n: usize,
    pub filter: Option<String>,
}

/// One coordinate of a class in the Smith basis of the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageCoord {
    pub slot: usize,
    pub value: BigInt,
    /// Order of the cyclic factor; `0` for a free factor.
    pub modulus: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    /// `certificate` lists `(relation row, coefficient)` summing to `u - v`.
    Equal { certificate: Vec<(usize, BigInt)> },
    /// Nonzero coordinates of `u - v` in the Smith basis.
    Distinct { image: Vec<ImageCoord> },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal { .. })
    }
}

/// `Z^basis / relations`, with Smith data for deciding equality of classes.
#[derive(Debug)]
pub struct Presentation<S> {
    pub header: Header,
    data: Data<S>,
    index: HashMap<S, usize>,
    hnf: OnceLock<Hnf>,
}

/// The serializable part of a presentation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Data<S> {
    pub basis: Vec<S>,
    pub relations: Vec<SparseRow>,
    /// Columns eliminated by unit rows, with the eliminating row, in elimination order.
    pub killed: Vec<(usize, usize)>,
    /// Remaining columns; the Smith form is taken over these.
    pub survivors: Vec<usize>,
    /// Relation rows (projected to the survivors) that enter the Smith form.
    pub rest_rows: Vec<usize>,
    pub snf_diag: Vec<BigInt>,
    pub snf_v: IntMatrix,
}

fn normalize(row: SparseRow) -> SparseRow {
    let mut acc: std::collections::BTreeMap<usize, i64> = std::collections::BTreeMap::new();
    for (c, k) in row {
        *acc.entry(c).or_insert(0) += k;
    }
    let mut out: SparseRow = acc.into_iter().filter(|&(_, k)| k != 0).collect();
    if out.first().is_some_and(|&(_, k)| k < 0) {
        for e in &mut out {
            e.1 = -e.1;
        }
    }
    out
}

impl<S: Clone + Eq + Hash> Presentation<S> {
    pub fn new(header: Header, basis: Vec<S>, rows: Vec<SparseRow>) -> Result<Self> {
        if basis.len() > MAX_BASIS {
            return Err(Error::SizeCapExceeded { what: "basis", size: basis.len(), cap: MAX_BASIS });
        }
        if rows.len() > MAX_ROWS {
            return Err(Error::SizeCapExceeded { what: "relations", size: rows.len(), cap: MAX_ROWS });
        }
        let relations: Vec<SparseRow> = rows
            .into_iter()
            .map(normalize)
            .filter(|r| !r.is_empty())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let data = reduce(basis, relations);
        Ok(Self::from_data(header, data))
    }

    pub fn from_data(header: Header, data: Data<S>) -> Self {
        let index = data.basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Presentation { header, data, index, hnf: OnceLock::new() }
    }

    pub fn data(&self) -> &Data<S> {
        &self.data
    }

    pub fn basis(&self) -> &[S] {
        &self.data.basis
    }

    pub fn relations(&self) -> &[SparseRow] {
        &self.data.relations
    }

    pub fn index_of(&self, s: &S) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// `(free rank, torsion coefficients)` of the presented group.
    pub fn invariants(&self) -> (usize, Vec<BigInt>) {
        zlat::invariants_from_diag(self.data.survivors.len(), &self.data.snf_diag)
    }

    pub fn vector(&self, c: &ClassVector<S>) -> Result<SparseRow>
    where
        S: Ord + std::fmt::Debug,
    {
        c.iter()
            .map(|(s, k)| {
                self.index_of(s).map(|i| (i, k)).ok_or_else(|| Error::UnknownSymbol(format!("{s:?}")))
            })
            .collect()
    }

    fn project(&self, v: &[(usize, i64)]) -> Vec<BigInt> {
        let pos: HashMap<usize, usize> =
            self.data.survivors.iter().enumerate().map(|(p, &c)| (c, p)).collect();
        let mut out = vec![BigInt::zero(); self.data.survivors.len()];
        for &(c, k) in v {
            if let Some(&p) = pos.get(&c) {
                out[p] += k;
            }
        }
        out
    }

    /// Coordinates of `v` in the Smith basis, one per nontrivial factor.
    pub fn image(&self, v: &[(usize, i64)]) -> Vec<ImageCoord> {
        let w = self.data.snf_v.left_mul_vec(&self.project(v));
        let diag = &self.data.snf_diag;
        w.into_iter()
            .enumerate()
            .filter_map(|(i, x)| {
                let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
                if d.is_one() {
                    return None;
                }
                let value = if d.is_zero() { x } else { x.mod_floor(&d) };
                Some(ImageCoord { slot: i, value, modulus: d })
            })
            .collect()
    }

    /// Whether `v` lies in the relation lattice.
    pub fn contains(&self, v: &[(usize, i64)]) -> bool {
        self.image(v).iter().all(|c| c.value.is_zero())
    }

    /// Coefficients over the relation rows summing to `v`, or `None`.
    pub fn certificate(&self, v: &[(usize, i64)]) -> Option<Vec<(usize, BigInt)>> {
        let hnf = self.hnf.get_or_init(|| {
            let pos: HashMap<usize, usize> =
                self.data.survivors.iter().enumerate().map(|(p, &c)| (c, p)).collect();
            let m = dense(&self.data.relations, &self.data.rest_rows, &pos, self.data.survivors.len());
            zlat::hnf(&m)
        });
        let x = zlat::member_with(hnf, &self.project(v))?;
        let mut coeffs: HashMap<usize, BigInt> = HashMap::new();
        let mut w: HashMap<usize, BigInt> = HashMap::new();
        for &(c, k) in v {
            *w.entry(c).or_insert_with(BigInt::zero) += k;
        }
        let mut apply = |row: usize, y: &BigInt, w: &mut HashMap<usize, BigInt>| {
            for &(c, k) in &self.data.relations[row] {
                *w.entry(c).or_insert_with(BigInt::zero) -= y * k;
            }
            *coeffs.entry(row).or_insert_with(BigInt::zero) += y;
        };
        for (xi, &row) in x.iter().zip(&self.data.rest_rows) {
            if !xi.is_zero() {
                apply(row, xi, &mut w);
            }
        }
        for &(c, row) in self.data.killed.iter().rev() {
            let k = self.data.relations[row].iter().find(|e| e.0 == c).expect("pivot entry").1;
            let y = w.get(&c).cloned().unwrap_or_else(BigInt::zero) * k;
            if !y.is_zero() {
                apply(row, &y, &mut w);
            }
        }
        if w.values().any(|x| !x.is_zero()) {
            return None;
        }
        let mut out: Vec<(usize, BigInt)> = coeffs.into_iter().filter(|(_, y)| !y.is_zero()).collect();
        out.sort();
        Some(out)
    }

    /// Decides `u = v` in the quotient.
    pub fn class_eq(&self, u: &ClassVector<S>, v: &ClassVector<S>) -> Result<Verdict>
    where
        S: Ord + std::fmt::Debug,
    {
        let d = self.vector(&u.minus(v))?;
        if self.contains(&d) {
            let certificate = self.certificate(&d).expect("image test and certificate agree");
            Ok(Verdict::Equal { certificate })
        } else {
            let image = self.image(&d).into_iter().filter(|c| !c.value.is_zero()).collect();
            Ok(Verdict::Distinct { image })
        }
    }

    /// Evaluates a certificate back into a vector over the basis.
    pub fn evaluate(&self, certificate: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
        let mut acc: std::collections::BTreeMap<usize, BigInt> = std::collections::BTreeMap::new();
        for (row, y) in certificate {
            for &(c, k) in &self.data.relations[*row] {
                *acc.entry(c).or_insert_with(BigInt::zero) += y * k;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }
}

fn dense(rows: &[SparseRow], which: &[usize], pos: &HashMap<usize, usize>, cols: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(which.len(), cols);
    for (i, &r) in which.iter().enumerate() {
        for &(c, k) in &rows[r] {
            if let Some(&p) = pos.get(&c) {
                m[(i, p)] += k;
            }
        }
    }
    m
}

/// Eliminates columns hit by unit rows, then takes the Smith form of what is left.
fn reduce<S>(basis: Vec<S>, relations: Vec<SparseRow>) -> Data<S> {
    let ncols = basis.len();
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    for (r, row) in relations.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c].push(r);
        }
    }
    let mut live: Vec<usize> = relations.iter().map(Vec::len).collect();
    let mut dead = vec![false; ncols];
    let mut used = vec![false; relations.len()];
    let mut killed = Vec::new();
    let mut queue: Vec<usize> = (0..relations.len()).filter(|&r| live[r] == 1).rev().collect();
    while let Some(r) = queue.pop() {
        if used[r] || live[r] != 1 {
            continue;
        }
        let &(c, k) = relations[r].iter().find(|e| !dead[e.0]).expect("one live entry");
        if k.abs() != 1 {
            continue;
        }
        dead[c] = true;
        used[r] = true;
        killed.push((c, r));
        for &r2 in &col_rows[c] {
            live[r2] -= 1;
            if live[r2] == 1 && !used[r2] {
                queue.push(r2);
            }
        }
    }
    let survivors: Vec<usize> = (0..ncols).filter(|&c| !dead[c]).collect();
    let pos: HashMap<usize, usize> = survivors.iter().enumerate().map(|(p, &c)| (c, p)).collect();
    let mut seen: BTreeSet<SparseRow> = BTreeSet::new();
    let mut rest_rows = Vec::new();
    for (r, row) in relations.iter().enumerate() {
        if used[r] || live[r] == 0 {
            continue;
        }
        let proj = normalize(row.iter().filter(|e| !dead[e.0]).map(|&(c, k)| (pos[&c], k)).collect());
        if seen.insert(proj) {
            rest_rows.push(r);
        }
    }
    let m = dense(&relations, &rest_rows, &pos, survivors.len());
    let s = zlat::snf_right(&m);
    Data { basis, relations, killed, survivors, rest_rows, snf_diag: s.diag, snf_v: s.v }
}
