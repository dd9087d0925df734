//! Finite abelian groups in invariant-factor form, their characters, subgroups
//! and the top-wedge determinant of a character sequence.
//!
//! Characters live in the same coordinate system as elements. The pairing is
//! `<chi, a> = sum_i chi_i * a_i * (e / d_i) mod e`, with `e` the exponent, i.e.
//! values are exponents of a fixed primitive `e`-th root of unity.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zlat::{self, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

impl TryFrom<Vec<u64>> for FinAbGroup {
    type Error = Error;
    fn try_from(orders: Vec<u64>) -> Result<Self> {
        FinAbGroup::new(orders)
    }
}

impl From<FinAbGroup> for Vec<u64> {
    fn from(g: FinAbGroup) -> Self {
        g.orders
    }
}

/// An element of a [`FinAbGroup`] (or of its dual): reduced coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbElem(pub Vec<u64>);

/// Characters share the element representation.
pub type Character = AbElem;

impl AbElem {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for AbElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [c] => write!(f, "{c}"),
            [] => write!(f, "0"),
            cs => {
                let s: Vec<String> = cs.iter().map(u64::to_string).collect();
                write!(f, "[{}]", s.join(","))
            }
        }
    }
}

impl FinAbGroup {
    /// Validates the divisibility chain `d_1 | d_2 | ...` with every `d_i >= 2`.
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if let Some(&d) = orders.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidGroup(format!("invariant factor {d} < 2")));
        }
        for w in orders.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::InvalidGroup(format!(
                    "orders {:?} do not form a divisibility chain",
                    orders
                )));
            }
        }
        Ok(FinAbGroup { orders })
    }

    /// Normalizes an arbitrary product of cyclic groups `Z/m_1 x ... x Z/m_k`.
    pub fn from_cyclic_orders(ms: &[u64]) -> Self {
        let diag: Vec<BigInt> = ms.iter().map(|&m| BigInt::from(m)).collect();
        let a = IntMatrix::diagonal(ms.len(), ms.len(), &diag);
        let (_, torsion) = zlat::quotient_invariants(ms.len(), &a);
        FinAbGroup { orders: torsion.iter().map(|t| t.to_u64().expect("order fits")).collect() }
    }

    pub fn trivial() -> Self {
        FinAbGroup { orders: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            FinAbGroup { orders: vec![n] }
        }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn zero(&self) -> AbElem {
        AbElem(vec![0; self.rank()])
    }

    pub fn unit(&self, i: usize) -> AbElem {
        let mut c = vec![0; self.rank()];
        c[i] = 1 % self.orders[i];
        AbElem(c)
    }

    /// Reduces arbitrary integer coordinates.
    pub fn elem(&self, coords: &[i64]) -> Result<AbElem> {
        if coords.len() != self.rank() {
            return Err(Error::NotAnElement(format!(
                "{coords:?} has length {} but the group has rank {}",
                coords.len(),
                self.rank()
            )));
        }
        Ok(AbElem(
            coords
                .iter()
                .zip(&self.orders)
                .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
                .collect(),
        ))
    }

    pub fn contains(&self, a: &AbElem) -> bool {
        a.0.len() == self.rank() && a.0.iter().zip(&self.orders).all(|(c, d)| c < d)
    }

    pub fn add(&self, a: &AbElem, b: &AbElem) -> AbElem {
        AbElem(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((x, y), d)| (x + y) % d)
                .collect(),
        )
    }

    pub fn neg(&self, a: &AbElem) -> AbElem {
        AbElem(a.0.iter().zip(&self.orders).map(|(x, d)| (d - x) % d).collect())
    }

    pub fn sub(&self, a: &AbElem, b: &AbElem) -> AbElem {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: i64, a: &AbElem) -> AbElem {
        AbElem(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &d)| ((x as i128 * k as i128).rem_euclid(d as i128)) as u64)
                .collect(),
        )
    }

    /// `<chi, a>` in `Z/exponent`.
    pub fn pairing(&self, chi: &Character, a: &AbElem) -> u64 {
        let e = self.exponent() as u128;
        let mut s: u128 = 0;
        for ((&c, &x), &d) in chi.0.iter().zip(&a.0).zip(&self.orders) {
            s = (s + (c as u128 * x as u128 % e) * (e / d as u128)) % e;
        }
        s as u64
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> Vec<AbElem> {
        let mut out = vec![AbElem(vec![])];
        for &d in &self.orders {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..d).map(move |c| {
                        let mut v = e.0.clone();
                        v.push(c);
                        AbElem(v)
                    })
                })
                .collect();
        }
        out
    }

    /// Least `m >= 1` with `m*a = 0`.
    pub fn elem_order(&self, a: &AbElem) -> u64 {
        a.0.iter()
            .zip(&self.orders)
            .fold(1, |acc, (&c, &d)| acc.lcm(&(d / c.gcd(&d))))
    }

    /// Order of a character; same formula as for elements.
    pub fn char_order(&self, chi: &Character) -> u64 {
        self.elem_order(chi)
    }

    fn diag_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank())
            .map(|i| {
                let mut r = vec![BigInt::zero(); self.rank()];
                r[i] = BigInt::from(self.orders[i]);
                r
            })
            .collect()
    }

    /// Subgroup generated by `gens`, with invariant-factor coordinates.
    pub fn structure(&self, gens: &[AbElem]) -> Structure {
        let mut rows: Vec<Vec<BigInt>> =
            gens.iter().map(|g| g.0.iter().map(|&c| BigInt::from(c)).collect()).collect();
        rows.extend(self.diag_rows());
        let sub = AbSubgroup::from_lattice_rows(self.clone(), rows);
        Structure::of(sub)
    }

    /// `{a : <chi, a> = 0 for all chi in chars}`.
    pub fn kernel_all(&self, chars: &[Character]) -> AbSubgroup {
        let r = self.rank();
        let e = self.exponent();
        // x in Z^r lies in the preimage iff x·W = 0 mod e, W holding one column per character.
        let k = chars.len();
        let mut m = IntMatrix::zeros(r + k, k);
        for (j, chi) in chars.iter().enumerate() {
            for i in 0..r {
                m[(i, j)] = BigInt::from(chi.0[i] % self.orders[i] * (e / self.orders[i]));
            }
            m[(r + j, j)] = BigInt::from(e);
        }
        let ker = zlat::left_kernel(&m);
        let mut rows: Vec<Vec<BigInt>> =
            ker.to_rows().into_iter().map(|row| row[..r].to_vec()).collect();
        rows.extend(self.diag_rows());
        AbSubgroup::from_lattice_rows(self.clone(), rows)
    }

    pub fn kernel(&self, chi: &Character) -> AbSubgroup {
        self.kernel_all(std::slice::from_ref(chi))
    }

    /// Whether `gens` generate the whole group.
    pub fn generates(&self, gens: &[AbElem]) -> bool {
        self.structure(gens).group.order() == self.order()
    }

    pub fn whole(&self) -> AbSubgroup {
        AbSubgroup::from_lattice_rows(self.clone(), IntMatrix::identity(self.rank()).to_rows())
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.orders.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", s.join(" x "))
    }
}

/// A subgroup, stored as the Hermite basis of its preimage lattice in `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbSubgroup {
    parent: FinAbGroup,
    basis: IntMatrix,
}

impl AbSubgroup {
    fn from_lattice_rows(parent: FinAbGroup, rows: Vec<Vec<BigInt>>) -> Self {
        let r = parent.rank();
        let h = zlat::hnf_basis(&IntMatrix::from_big_rows(r, rows)).h;
        // full rank because the lattice contains diag(orders)
        let basis = IntMatrix::from_big_rows(r, (0..r).map(|i| h.row(i).to_vec()).collect());
        AbSubgroup { parent, basis }
    }

    pub fn parent(&self) -> &FinAbGroup {
        &self.parent
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn order(&self) -> u64 {
        let det: BigInt = (0..self.basis.rows()).map(|i| self.basis[(i, i)].clone()).product();
        self.parent.order() / det.to_u64().expect("index fits")
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Generators as elements of the parent (reduced basis rows; some may be zero).
    pub fn generators(&self) -> Vec<AbElem> {
        (0..self.basis.rows())
            .map(|i| {
                AbElem(
                    self.basis
                        .row(i)
                        .iter()
                        .zip(self.parent.orders())
                        .map(|(x, &d)| x.mod_floor(&BigInt::from(d)).to_u64().unwrap())
                        .collect(),
                )
            })
            .filter(|g| !g.is_zero())
            .collect()
    }

    pub fn contains(&self, a: &AbElem) -> bool {
        self.coefficients(a).is_some()
    }

    /// Solves `c·basis = a` (as integer vectors); the basis is upper triangular of full rank.
    fn coefficients(&self, a: &AbElem) -> Option<Vec<BigInt>> {
        let r = self.parent.rank();
        let mut res: Vec<BigInt> = a.0.iter().map(|&x| BigInt::from(x)).collect();
        let mut c = vec![BigInt::zero(); r];
        for i in 0..r {
            let (q, rem) = res[i].div_mod_floor(&self.basis[(i, i)]);
            if !rem.is_zero() {
                return None;
            }
            for j in i..r {
                let b = &self.basis[(i, j)];
                if !b.is_zero() {
                    res[j] -= &q * b;
                }
            }
            c[i] = q;
        }
        Some(c)
    }

    pub fn intersect(&self, other: &AbSubgroup) -> AbSubgroup {
        assert_eq!(self.parent, other.parent);
        let r = self.parent.rank();
        // x = y1·B1 = y2·B2  <=>  (y1, y2)·[B1; -B2] = 0
        let mut m = IntMatrix::zeros(2 * r, r);
        for i in 0..r {
            for j in 0..r {
                m[(i, j)] = self.basis[(i, j)].clone();
                m[(r + i, j)] = -other.basis[(i, j)].clone();
            }
        }
        let ker = zlat::left_kernel(&m);
        let top = IntMatrix::from_big_rows(
            r,
            ker.to_rows().into_iter().map(|row| row[..r].to_vec()).collect(),
        );
        let rows = top.mul(&self.basis).to_rows();
        AbSubgroup::from_lattice_rows(self.parent.clone(), rows)
    }

    pub fn is_subgroup_of(&self, other: &AbSubgroup) -> bool {
        self.generators().iter().all(|g| other.contains(g))
    }
}

/// Invariant-factor coordinates for a subgroup `S` of an ambient group.
#[derive(Clone, Debug)]
pub struct Structure {
    pub group: FinAbGroup,
    pub sub: AbSubgroup,
    /// Right Smith transform restricted to the kept columns (`r x k`).
    fwd: IntMatrix,
    /// Images in the ambient group of the standard generators of `group`.
    images: Vec<AbElem>,
}

impl Structure {
    fn of(sub: AbSubgroup) -> Structure {
        let parent = sub.parent.clone();
        let r = parent.rank();
        // D = M·B with D = diag(orders), B the basis; S = Z^r B / Z^r D = Z^r / rowspan(M).
        let mut mrows = Vec::with_capacity(r);
        for (i, &d) in parent.orders().iter().enumerate() {
            let mut target: Vec<BigInt> = vec![BigInt::zero(); r];
            target[i] = BigInt::from(d);
            mrows.push(solve_upper(&sub.basis, &target));
        }
        let m = IntMatrix::from_big_rows(r, mrows);
        let s = zlat::snf(&m);
        let v = &s.v;
        let vinv = zlat::hnf(v).u.expect("tracked"); // U·V = I for unimodular V
        let keep: Vec<usize> = (0..r).filter(|&i| s.diag[i] != BigInt::from(1)).collect();
        let orders: Vec<u64> = keep.iter().map(|&i| s.diag[i].to_u64().unwrap()).collect();
        let group = FinAbGroup { orders };
        let mut fwd = IntMatrix::zeros(r, keep.len());
        for i in 0..r {
            for (k, &j) in keep.iter().enumerate() {
                fwd[(i, k)] = v[(i, j)].clone();
            }
        }
        let images = keep
            .iter()
            .map(|&j| {
                let coeffs = vinv.row(j).to_vec();
                let x = sub.basis.left_mul_vec(&coeffs);
                AbElem(
                    x.iter()
                        .zip(parent.orders())
                        .map(|(c, &d)| c.mod_floor(&BigInt::from(d)).to_u64().unwrap())
                        .collect(),
                )
            })
            .collect();
        Structure { group, sub, fwd, images }
    }

    /// Coordinates of an element of the subgroup.
    pub fn to_sub(&self, a: &AbElem) -> Option<AbElem> {
        let c = self.sub.coefficients(a)?;
        let y = self.fwd.left_mul_vec(&c);
        Some(AbElem(
            y.iter()
                .zip(self.group.orders())
                .map(|(x, &d)| x.mod_floor(&BigInt::from(d)).to_u64().unwrap())
                .collect(),
        ))
    }

    pub fn to_ambient(&self, s: &AbElem) -> AbElem {
        let parent = self.sub.parent();
        let mut acc = parent.zero();
        for (&c, g) in s.0.iter().zip(&self.images) {
            acc = parent.add(&acc, &parent.scale(c as i64, g));
        }
        acc
    }

    pub fn generator_images(&self) -> &[AbElem] {
        &self.images
    }

    /// Restriction of a character of the ambient group to the subgroup, in the
    /// subgroup's coordinates.
    pub fn restrict(&self, chi: &Character) -> Character {
        let parent = self.sub.parent();
        let e_amb = parent.exponent();
        let e_sub = self.group.exponent();
        AbElem(
            self.images
                .iter()
                .zip(self.group.orders())
                .map(|(g, &s)| {
                    let val = parent.pairing(chi, g);
                    // val represents a root of unity of order dividing s | e_sub | e_amb
                    let v_sub = val / (e_amb / e_sub);
                    (v_sub / (e_sub / s)) % s
                })
                .collect(),
        )
    }
}

fn solve_upper(b: &IntMatrix, target: &[BigInt]) -> Vec<BigInt> {
    let r = b.rows();
    let mut res = target.to_vec();
    let mut c = vec![BigInt::zero(); r];
    for i in 0..r {
        let (q, rem) = res[i].div_mod_floor(&b[(i, i)]);
        debug_assert!(rem.is_zero(), "diag(orders) lies in every preimage lattice");
        for j in i..r {
            let x = &b[(i, j)];
            if !x.is_zero() {
                res[j] -= &q * x;
            }
        }
        c[i] = q;
    }
    c
}

/// `det(beta)` in the top exterior power, one component per index subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WedgeClass {
    pub n: usize,
    /// Index subsets `i_1 < ... < i_n` in lexicographic order.
    pub subsets: Vec<Vec<usize>>,
    /// Modulus of each component: `d_{i_1}`, the smallest chosen order.
    pub moduli: Vec<u64>,
    pub residues: Vec<u64>,
    pub sign_normalized: bool,
}

impl WedgeClass {
    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }

    pub fn negate(&self) -> WedgeClass {
        let residues = self
            .residues
            .iter()
            .zip(&self.moduli)
            .map(|(&r, &m)| if m == 0 { r } else { (m - r) % m })
            .collect();
        WedgeClass { residues, ..self.clone() }
    }

    /// Picks the lexicographically smaller of `v` and `-v`.
    pub fn normalized(&self) -> WedgeClass {
        let neg = self.negate();
        let mut out = if neg.residues < self.residues { neg } else { self.clone() };
        out.sign_normalized = true;
        out
    }

    /// The set `{v, -v}` of residue vectors (one element when `v = -v`).
    pub fn sign_class(&self) -> Vec<Vec<u64>> {
        let mut out = vec![self.residues.clone(), self.negate().residues];
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for WedgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cls = self.sign_class();
        let parts: Vec<String> = cls
            .iter()
            .map(|v| match v.as_slice() {
                [x] => x.to_string(),
                xs => format!("{xs:?}"),
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `b_1 ∧ ... ∧ b_n` up to sign.
pub fn wedge_det(group: &FinAbGroup, beta: &[Character]) -> WedgeClass {
    let n = beta.len();
    let r = group.rank();
    let subsets = if n > r { vec![] } else { index_subsets(r, n) };
    let mut moduli = Vec::with_capacity(subsets.len());
    let mut residues = Vec::with_capacity(subsets.len());
    for s in &subsets {
        let modulus = s.first().map(|&i| group.orders()[i]).unwrap_or(0);
        let rows: Vec<Vec<BigInt>> = beta
            .iter()
            .map(|b| s.iter().map(|&i| BigInt::from(b.0[i])).collect())
            .collect();
        let det = IntMatrix::from_big_rows(n, rows).determinant();
        let res = if modulus == 0 {
            det.to_u64().unwrap_or(0)
        } else {
            det.mod_floor(&BigInt::from(modulus)).to_u64().unwrap()
        };
        moduli.push(modulus);
        residues.push(res);
    }
    WedgeClass { n, subsets, moduli, residues, sign_normalized: false }.normalized()
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FinAbGroup {
        FinAbGroup::new(orders.to_vec()).unwrap()
    }

    fn e(c: &[u64]) -> AbElem {
        AbElem(c.to_vec())
    }

    /// Brute-force closure of a generating set.
    fn closure(grp: &FinAbGroup, gens: &[AbElem]) -> Vec<AbElem> {
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(grp.zero());
        let mut frontier = vec![grp.zero()];
        while let Some(x) = frontier.pop() {
            for gen in gens {
                let y = grp.add(&x, gen);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    #[test]
    fn rejects_broken_chain() {
        assert!(FinAbGroup::new(vec![3, 2]).is_err());
        assert!(FinAbGroup::new(vec![1]).is_err());
        assert_eq!(FinAbGroup::from_cyclic_orders(&[2, 3]), g(&[6]));
        assert_eq!(FinAbGroup::from_cyclic_orders(&[4, 2, 1]), g(&[2, 4]));
    }

    #[test]
    fn structure_examples() {
        let z6 = g(&[6]);
        assert!(z6.structure(&[]).group.is_trivial());
        let s = z6.structure(&[e(&[2])]);
        assert_eq!(s.group, g(&[3]));
        let img = s.to_ambient(&e(&[1]));
        assert_eq!(z6.elem_order(&img), 3);
        assert_eq!(s.to_sub(&img), Some(e(&[1])));

        let z44 = g(&[4, 4]);
        let gens = [e(&[2, 0]), e(&[0, 2])];
        let s = z44.structure(&gens);
        assert_eq!(s.group.order() as usize, closure(&z44, &gens).len());
        assert_eq!(s.group, g(&[2, 2]));
    }

    #[test]
    fn structure_maps_are_inverse() {
        let a = g(&[2, 12]);
        let gens = [e(&[1, 3]), e(&[0, 8])];
        let s = a.structure(&gens);
        let elems = closure(&a, &gens);
        assert_eq!(elems.len() as u64, s.group.order());
        for x in &elems {
            let y = s.to_sub(x).unwrap();
            assert_eq!(&s.to_ambient(&y), x);
        }
        for y in s.group.elements() {
            assert_eq!(s.to_sub(&s.to_ambient(&y)), Some(y));
        }
        assert!(s.to_sub(&e(&[0, 1])).is_none());
        // idempotence: structuring the image again gives identity coordinates
        let again = a.structure(&s.generator_images().to_vec());
        assert_eq!(again.group, s.group);
        for (k, img) in s.generator_images().iter().enumerate() {
            assert_eq!(again.to_sub(img), Some(s.group.unit(k)));
        }
    }

    #[test]
    fn kernel_examples() {
        let z4 = g(&[4]);
        assert_eq!(z4.kernel(&e(&[0])).order(), 4);
        assert_eq!(z4.kernel(&e(&[1])).order(), 1);
        let k = z4.kernel(&e(&[2]));
        let members: Vec<u64> = (0..4).filter(|&x| k.contains(&e(&[x]))).collect();
        assert_eq!(members, vec![0, 2]);
    }

    #[test]
    fn kernel_index_is_char_order() {
        let a = g(&[2, 6]);
        for chi in a.elements() {
            let k = a.kernel(&chi);
            let brute = a.elements().iter().filter(|x| a.pairing(&chi, x) == 0).count() as u64;
            assert_eq!(k.order(), brute);
            assert_eq!(a.order(), k.order() * a.char_order(&chi));
        }
    }

    #[test]
    fn restrict_examples() {
        let z4 = g(&[4]);
        let s = z4.structure(&[e(&[2])]);
        assert_eq!(s.group, g(&[2]));
        assert_eq!(s.restrict(&e(&[1])), e(&[1]));
        assert_eq!(s.restrict(&e(&[2])), e(&[0]));
        let triv = z4.structure(&[]);
        assert!(triv.restrict(&e(&[3])).is_zero());
    }

    #[test]
    fn char_order_examples() {
        assert_eq!(g(&[5]).char_order(&e(&[0])), 1);
        assert_eq!(g(&[5]).char_order(&e(&[1])), 5);
        let a = g(&[4, 12]);
        let chi = e(&[2, 3]);
        let mut m = 1;
        let mut acc = chi.clone();
        while !acc.is_zero() {
            acc = a.add(&acc, &chi);
            m += 1;
        }
        assert_eq!(a.char_order(&chi), m);
        assert_eq!(m, 4);
    }

    #[test]
    fn wedge_examples() {
        let a = g(&[5, 5]);
        let w = wedge_det(&a, &[e(&[1, 0]), e(&[0, 1])]);
        assert_eq!(w.sign_class(), vec![vec![1], vec![4]]);
        let w = wedge_det(&a, &[e(&[1, 0]), e(&[0, 2])]);
        assert_eq!(w.sign_class(), vec![vec![2], vec![3]]);
        assert!(wedge_det(&a, &[e(&[1, 0]), e(&[2, 0])]).is_zero());
        // more characters than invariant factors
        assert!(wedge_det(&g(&[5]), &[e(&[1]), e(&[2])]).is_zero());
    }

    #[test]
    fn intersection_matches_brute_force() {
        let a = g(&[2, 4]);
        let k1 = a.kernel(&e(&[1, 1]));
        let k2 = a.kernel(&e(&[0, 2]));
        let both = k1.intersect(&k2);
        let brute =
            a.elements().iter().filter(|x| k1.contains(x) && k2.contains(x)).count() as u64;
        assert_eq!(both.order(), brute);
        assert_eq!(both, a.kernel_all(&[e(&[1, 1]), e(&[0, 2])]));
    }
}
