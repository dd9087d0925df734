use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::abgrp::{Character, FinAbGroup};
use crate::error::{Error, Result};

/// Cap on the number of charts produced by [`standardize`].
pub const MAX_CHARTS: usize = 200_000;

/// A linear diagonal action on `A^n` with a set of boundary coordinate hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chart {
    pub weights: Vec<Character>,
    pub boundary: BTreeSet<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartModel {
    group: FinAbGroup,
    n: usize,
    charts: Vec<Chart>,
}

/// One blow-up performed by [`standardize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupStep {
    pub chart: usize,
    /// Coordinates cut out by the center.
    pub center: Vec<usize>,
    pub d: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardizeLog {
    /// Maximal divisorial index at the start of each round, then the final value.
    pub maxima: Vec<usize>,
    pub steps: Vec<BlowupStep>,
}

impl ChartModel {
    pub fn new(group: FinAbGroup, charts: Vec<Chart>) -> Result<Self> {
        let n = charts.first().map_or(0, |c| c.weights.len());
        for (k, c) in charts.iter().enumerate() {
            if c.weights.len() != n {
                return Err(Error::Invalid(format!("chart {k} has {} weights, expected {n}", c.weights.len())));
            }
            if let Some(bad) = c.weights.iter().find(|a| !group.contains(a)) {
                return Err(Error::NotAnElement(format!("{bad:?} in {group}")));
            }
            if let Some(b) = c.boundary.iter().find(|&&b| b >= n) {
                return Err(Error::Invalid(format!("boundary index {b} in chart {k} of dimension {n}")));
            }
        }
        Ok(ChartModel { group, n, charts })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn charts(&self) -> &[Chart] {
        &self.charts
    }

    /// `d` at the stratum where exactly the coordinates in `z` vanish.
    pub fn stratum_index(&self, chart: &Chart, z: &BTreeSet<usize>) -> usize {
        let g = &self.group;
        let mut cut: Vec<Character> = Vec::new();
        for (i, a) in chart.weights.iter().enumerate() {
            if !z.contains(&i) || chart.boundary.contains(&i) {
                cut.push(a.clone());
            }
        }
        let gens = g.kernel_all(&cut).generators();
        chart.weights.iter().filter(|a| gens.iter().any(|h| g.pairing(a, h) != 0)).count()
    }

    /// Largest `d` over all strata, with every `(chart, stratum)` attaining it.
    pub fn divisorial_index(&self) -> (usize, Vec<(usize, Vec<usize>)>) {
        let mut best = 0;
        let mut at = Vec::new();
        for (k, c) in self.charts.iter().enumerate() {
            for z in subsets(self.n) {
                let d = self.stratum_index(c, &z);
                if d > best {
                    best = d;
                    at.clear();
                }
                if d == best {
                    at.push((k, z.into_iter().collect()));
                }
            }
        }
        (best, at)
    }

    /// Smallest stratum index set attaining `m` in `chart`, if any.
    fn minimal_center(&self, chart: &Chart, m: usize) -> Option<BTreeSet<usize>> {
        let mut hits: Vec<BTreeSet<usize>> =
            subsets(self.n).into_iter().filter(|z| self.stratum_index(chart, z) == m).collect();
        hits.sort_by_key(|z| (z.len(), z.iter().copied().collect::<Vec<_>>()));
        hits.into_iter().next()
    }
}

fn subsets(n: usize) -> Vec<BTreeSet<usize>> {
    (0u32..1 << n).map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect()).collect()
}

/// Blow-up of the coordinate subspace `center` in one chart: one new chart per
/// `k ∈ center`, with the exceptional divisor in slot `k`.
pub fn blow_up_chart(group: &FinAbGroup, chart: &Chart, center: &BTreeSet<usize>) -> Vec<Chart> {
    center
        .iter()
        .map(|&k| {
            let ak = &chart.weights[k];
            let weights = chart
                .weights
                .iter()
                .enumerate()
                .map(|(i, a)| if i != k && center.contains(&i) { group.sub(a, ak) } else { a.clone() })
                .collect();
            let mut boundary = chart.boundary.clone();
            boundary.insert(k);
            Chart { weights, boundary }
        })
        .collect()
}

/// Blows up maximal-`d` strata until `d` vanishes everywhere.
///
/// Each round removes every stratum attaining the current maximum, blowing up a
/// minimal one at a time; the maximum must then have dropped.
pub fn standardize(cm: &ChartModel) -> Result<(ChartModel, StandardizeLog)> {
    let mut cur = cm.clone();
    let mut log = StandardizeLog::default();
    let (mut m, _) = cur.divisorial_index();
    log.maxima.push(m);
    while m > 0 {
        let mut k = 0;
        while k < cur.charts.len() {
            match cur.minimal_center(&cur.charts[k], m) {
                Some(center) => {
                    let new = blow_up_chart(&cur.group, &cur.charts[k], &center);
                    log.steps.push(BlowupStep { chart: k, center: center.into_iter().collect(), d: m });
                    cur.charts.splice(k..=k, new);
                    if cur.charts.len() > MAX_CHARTS {
                        return Err(Error::SizeCapExceeded { what: "charts", size: cur.charts.len(), cap: MAX_CHARTS });
                    }
                }
                None => k += 1,
            }
        }
        let (next, _) = cur.divisorial_index();
        if next >= m {
            return Err(Error::NonTermination { previous: m, next });
        }
        m = next;
        log.maxima.push(m);
    }
    Ok((cur, log))
}
