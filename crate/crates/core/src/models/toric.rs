use std::collections::BTreeMap;

use rayon::prelude::*;

use super::Fan;
use crate::abgrp::{AbSubgroup, Character, FinAbGroup};
use crate::error::{Error, Result};
use crate::symb::{canon_b, BSymbol, ClassVector};

/// A finite abelian group acting through the torus of a smooth complete toric variety.
///
/// `w[k]` is the character assigned to the `k`-th standard basis vector of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricGAction {
    fan: Fan,
    group: FinAbGroup,
    w: Vec<Character>,
}

/// A torus orbit closure fixed pointwise by the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedStratum {
    pub cone: Vec<usize>,
    /// Nonzero weights on the normal directions, sorted.
    pub normal: Vec<Character>,
    pub dim: usize,
}

impl ToricGAction {
    pub fn new(fan: Fan, group: FinAbGroup, w: Vec<Character>) -> Result<Self> {
        if w.len() != fan.n() {
            return Err(Error::Invalid(format!("{} weights for dimension {}", w.len(), fan.n())));
        }
        if let Some(bad) = w.iter().find(|c| !group.contains(c)) {
            return Err(Error::NotAnElement(format!("{bad:?} in {group}")));
        }
        if !group.generates(&w) {
            return Err(Error::NotGenericallyFree);
        }
        Ok(ToricGAction { fan, group, w })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn w(&self) -> &[Character] {
        &self.w
    }

    pub fn n(&self) -> usize {
        self.fan.n()
    }

    /// Weights on the coordinates of the affine chart of a maximal cone, in the
    /// order of its rays.
    pub fn chart_weights(&self, cone: &[usize]) -> Vec<Character> {
        self.fan
            .dual_basis(cone)
            .iter()
            .map(|m| {
                m.iter().zip(&self.w).fold(self.group.zero(), |acc, (&k, c)| self.group.add(&acc, &self.group.scale(k, c)))
            })
            .collect()
    }

    /// Weights of every maximal cone, indexed like `fan().max_cones()`.
    pub fn all_chart_weights(&self) -> Vec<Vec<Character>> {
        self.fan.max_cones().par_iter().map(|c| self.chart_weights(c)).collect()
    }

    /// Fixed-locus components, one per cone whose orbit closure is pointwise fixed.
    pub fn fixed_strata(&self) -> Result<Vec<FixedStratum>> {
        let charts = self.all_chart_weights();
        let mut out = Vec::new();
        for tau in self.fan.cones() {
            let mut seen: Option<(bool, Vec<Character>)> = None;
            for (c, weights) in self.fan.max_cones().iter().zip(&charts) {
                if !tau.iter().all(|i| c.contains(i)) {
                    continue;
                }
                let along_zero = c.iter().zip(weights).filter(|(r, _)| !tau.contains(r)).all(|(_, a)| a.is_zero());
                let mut normal: Vec<Character> =
                    c.iter().zip(weights).filter(|(r, _)| tau.contains(r)).map(|(_, a)| a.clone()).collect();
                normal.sort();
                let fixed = along_zero && normal.iter().all(|a| !a.is_zero());
                let here = (fixed, if fixed { normal } else { Vec::new() });
                match &seen {
                    None => seen = Some(here),
                    Some(prev) if *prev != here => {
                        return Err(Error::InconsistentCharts(format!("cone {tau:?} at maximal cone {c:?}")));
                    }
                    Some(_) => {}
                }
            }
            if let Some((true, normal)) = seen {
                out.push(FixedStratum { dim: self.n() - tau.len(), cone: tau, normal });
            }
        }
        Ok(out)
    }

    /// `Σ_F β_F(X)` over the components `F` of the fixed locus.
    pub fn class_b(&self) -> Result<ClassVector<BSymbol>> {
        let mut out = ClassVector::zero();
        for f in self.fixed_strata()? {
            let mut beta = f.normal;
            beta.extend(std::iter::repeat(self.group.zero()).take(f.dim));
            out.add_term(canon_b(&self.group, beta)?, 1);
        }
        Ok(out)
    }

    /// Equivariant blow-up along the orbit closure of `cone`.
    pub fn star_subdivide(&self, cone: &[usize]) -> Result<(ToricGAction, usize)> {
        let (fan, rho) = self.fan.star_subdivide(cone)?;
        Ok((ToricGAction { fan, group: self.group.clone(), w: self.w.clone() }, rho))
    }

    /// Whether the subgroup `s` has a fixed point.
    pub fn has_fixed_point(&self, s: &AbSubgroup) -> bool {
        let gens = s.generators();
        let trivial_on_s = |a: &Character| gens.iter().all(|g| self.group.pairing(a, g) == 0);
        let charts = self.all_chart_weights();
        self.fan.cones().iter().any(|tau| {
            self.fan.max_cones().iter().zip(&charts).any(|(c, weights)| {
                tau.iter().all(|i| c.contains(i))
                    && c.iter().zip(weights).filter(|(r, _)| !tau.contains(r)).all(|(_, a)| trivial_on_s(a))
            })
        })
    }

    /// Isolated fixed points: maximal cones with all chart weights nonzero, keyed by cone.
    pub fn fixed_points(&self) -> BTreeMap<Vec<usize>, Vec<Character>> {
        self.fan
            .max_cones()
            .iter()
            .zip(self.all_chart_weights())
            .filter(|(_, w)| w.iter().all(|a| !a.is_zero()))
            .map(|(c, w)| (c.clone(), w))
            .collect()
    }
}

/// `P^n` with `G` acting by the characters `a_0, ..., a_n` on homogeneous coordinates.
pub fn projective_space_action(group: &FinAbGroup, weights: &[Character]) -> Result<ToricGAction> {
    if weights.len() < 2 {
        return Err(Error::Invalid("need at least two weights".into()));
    }
    if let Some(bad) = weights.iter().find(|c| !group.contains(c)) {
        return Err(Error::NotAnElement(format!("{bad:?} in {group}")));
    }
    let n = weights.len() - 1;
    let w = weights[1..].iter().map(|a| group.sub(a, &weights[0])).collect();
    ToricGAction::new(Fan::projective_space(n)?, group.clone(), w)
}

/// `[X × P^m]`: every symbol gains `m` zero characters.
pub fn product_trivial_pm(group: &FinAbGroup, c: &ClassVector<BSymbol>, m: usize) -> ClassVector<BSymbol> {
    c.map(|s| Some(s.padded(group, m)))
}
