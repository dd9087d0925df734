use std::collections::{BTreeSet, HashMap};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zlat::IntMatrix;

/// A smooth complete fan in `Z^n`, given by primitive rays and maximal cones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFan", into = "RawFan")]
pub struct Fan {
    n: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawFan {
    n: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

impl TryFrom<RawFan> for Fan {
    type Error = Error;

    fn try_from(r: RawFan) -> Result<Fan> {
        Fan::new(r.n, r.rays, r.max_cones)
    }
}

impl From<Fan> for RawFan {
    fn from(f: Fan) -> RawFan {
        RawFan { n: f.n, rays: f.rays, max_cones: f.max_cones }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Inverse of a unimodular integer matrix.
pub(crate) fn unimodular_inverse(rows: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = rows.len();
    let det = IntMatrix::from_rows(n, rows).determinant().to_i64()?;
    if det.abs() != 1 {
        return None;
    }
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = rows
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let m = if n == 1 { 1 } else { IntMatrix::from_rows(n - 1, &minor).determinant().to_i64()? };
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[j][i] = sign * m * det;
        }
    }
    Some(inv)
}

impl Fan {
    /// Validates smoothness, the facet-sharing condition and completeness.
    pub fn new(n: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        let bad = |m: String| Err(Error::InvalidFan(m));
        if n == 0 {
            return bad("dimension 0".into());
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != n {
                return bad(format!("ray {i} has length {}", r.len()));
            }
            if r.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
                return bad(format!("ray {i} is not primitive"));
            }
        }
        if rays.iter().collect::<BTreeSet<_>>().len() != rays.len() {
            return bad("repeated ray".into());
        }
        let mut cones: Vec<Vec<usize>> = Vec::with_capacity(max_cones.len());
        for c in max_cones {
            let mut c = c;
            c.sort_unstable();
            c.dedup();
            if c.len() != n || c.iter().any(|&i| i >= rays.len()) {
                return bad(format!("cone {c:?} does not have {n} valid rays"));
            }
            cones.push(c);
        }
        if cones.iter().collect::<BTreeSet<_>>().len() != cones.len() {
            return bad("repeated cone".into());
        }
        let fan = Fan { n, rays, max_cones: cones };
        fan.check_geometry()?;
        Ok(fan)
    }

    fn check_geometry(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidFan(m));
        let mut duals = Vec::with_capacity(self.max_cones.len());
        for c in &self.max_cones {
            match unimodular_inverse(&self.cone_rays(c)) {
                Some(inv) => duals.push(inv),
                None => return bad(format!("cone {c:?} is not smooth")),
            }
        }
        // each facet lies in exactly two maximal cones, with the opposite rays on
        // opposite sides
        let mut facets: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
        for (k, c) in self.max_cones.iter().enumerate() {
            for (pos, _) in c.iter().enumerate() {
                let mut f = c.clone();
                f.remove(pos);
                facets.entry(f).or_default().push((k, pos));
            }
        }
        for (f, owners) in &facets {
            if owners.len() != 2 {
                return bad(format!("facet {f:?} lies in {} maximal cones", owners.len()));
            }
            let (k1, p1) = owners[0];
            let (k2, p2) = owners[1];
            let opposite = self.max_cones[k2][p2];
            // coefficient of the other cone's extra ray along the dropped ray of k1
            let coeff = self.coords(&duals[k1], &self.rays[opposite])[p1];
            if coeff >= 0 {
                return bad(format!("cones {:?} and {:?} overlap", self.max_cones[k1], self.max_cones[k2]));
            }
        }
        // a generic point lies in exactly one cone
        let v: Vec<i64> = (0..self.n).scan(1i64, |x, _| {
            *x = *x * 1_000_003 % 998_244_353;
            Some(*x)
        }).collect();
        let hits = duals.iter().filter(|d| self.coords(d, &v).iter().all(|&x| x > 0)).count();
        if hits != 1 {
            return bad(format!("generic point lies in {hits} maximal cones"));
        }
        Ok(())
    }

    /// Coordinates of `v` in the basis whose inverse is `dual`.
    fn coords(&self, dual: &[Vec<i64>], v: &[i64]) -> Vec<i128> {
        (0..self.n)
            .map(|i| (0..self.n).map(|k| v[k] as i128 * dual[k][i] as i128).sum())
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn cone_rays(&self, cone: &[usize]) -> Vec<Vec<i64>> {
        cone.iter().map(|&i| self.rays[i].clone()).collect()
    }

    /// Whether `cone` (sorted ray indices) is a face of some maximal cone.
    pub fn is_cone(&self, cone: &[usize]) -> bool {
        self.max_cones.iter().any(|c| cone.iter().all(|i| c.contains(i)))
    }

    /// Every cone of the fan, as sorted ray index lists, in sorted order.
    pub fn cones(&self) -> Vec<Vec<usize>> {
        let mut out = BTreeSet::new();
        for c in &self.max_cones {
            for mask in 0u32..(1 << c.len()) {
                out.insert(c.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &r)| r).collect());
            }
        }
        out.into_iter().collect()
    }

    /// Dual basis of a maximal cone: row `i` pairs to 1 with its `i`-th ray.
    pub fn dual_basis(&self, cone: &[usize]) -> Vec<Vec<i64>> {
        let inv = unimodular_inverse(&self.cone_rays(cone)).expect("validated cone");
        (0..self.n).map(|i| (0..self.n).map(|k| inv[k][i]).collect()).collect()
    }

    /// The fan of `P^n`: rays `e_0 = -Σ e_i, e_1, ..., e_n`, cones omitting one ray.
    pub fn projective_space(n: usize) -> Result<Fan> {
        let mut rays = vec![vec![-1i64; n]];
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            rays.push(e);
        }
        let cones = (0..=n).map(|k| (0..=n).filter(|&i| i != k).collect()).collect();
        Fan::new(n, rays, cones)
    }

    /// Star subdivision at `cone`: adds the ray `Σ_{r ∈ cone} r`.
    pub fn star_subdivide(&self, cone: &[usize]) -> Result<(Fan, usize)> {
        let mut tau = cone.to_vec();
        tau.sort_unstable();
        tau.dedup();
        if tau.len() < 2 {
            return Err(Error::RayCone(tau));
        }
        if tau.iter().any(|&i| i >= self.rays.len()) || !self.is_cone(&tau) {
            return Err(Error::NotACone(tau));
        }
        let rho: Vec<i64> = (0..self.n).map(|k| tau.iter().map(|&i| self.rays[i][k]).sum()).collect();
        let new = self.rays.len();
        let mut rays = self.rays.clone();
        rays.push(rho);
        let mut cones = Vec::new();
        for c in &self.max_cones {
            if tau.iter().all(|i| c.contains(i)) {
                for t in &tau {
                    let mut d: Vec<usize> = c.iter().copied().filter(|x| x != t).collect();
                    d.push(new);
                    cones.push(d);
                }
            } else {
                cones.push(c.clone());
            }
        }
        Ok((Fan::new(self.n, rays, cones)?, new))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_spaces_validate() {
        for n in 1..=4 {
            let f = Fan::projective_space(n).unwrap();
            assert_eq!(f.max_cones().len(), n + 1);
            assert_eq!(f.rays().len(), n + 1);
        }
    }

    #[test]
    fn rejects_bad_fans() {
        // singular cone
        assert!(Fan::new(2, vec![vec![1, 0], vec![1, 2], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).is_err());
        // incomplete
        assert!(Fan::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1]]).is_err());
        // non-primitive ray
        assert!(Fan::new(1, vec![vec![2], vec![-1]], vec![vec![0], vec![1]]).is_err());
        // P^1 x P^1, then two cones overlapping in the upper half plane
        let rays = vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]];
        assert!(Fan::new(2, rays.clone(), vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).is_ok());
        let overlapping = Fan::new(2, rays, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert!(overlapping.is_err());
    }

    #[test]
    fn subdividing_a_plane_fixed_point() {
        let f = Fan::projective_space(2).unwrap();
        let (g, rho) = f.star_subdivide(&[1, 2]).unwrap();
        assert_eq!(g.rays().len(), 4);
        assert_eq!(g.rays()[rho], vec![1, 1]);
        assert_eq!(g.max_cones().len(), 4);
        assert_eq!(f.star_subdivide(&[1]).unwrap_err(), Error::RayCone(vec![1]));
        let p1 = Fan::projective_space(1).unwrap();
        assert_eq!(p1.star_subdivide(&[0, 1]).unwrap_err(), Error::NotACone(vec![0, 1]));
    }

    #[test]
    fn dual_basis_pairs_to_identity() {
        let f = Fan::projective_space(3).unwrap();
        for c in f.max_cones() {
            let m = f.dual_basis(c);
            for (i, mi) in m.iter().enumerate() {
                for (j, &r) in c.iter().enumerate() {
                    let p: i64 = mi.iter().zip(&f.rays()[r]).map(|(a, b)| a * b).sum();
                    assert_eq!(p, (i == j) as i64);
                }
            }
        }
    }
}
