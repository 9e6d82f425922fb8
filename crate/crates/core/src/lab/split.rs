//! Split graphs: recognition and the bounded non-neighbor kernel audit.

use crate::error::{Error, Result};
use crate::fpt::DualInstance;
use crate::graph::{maximum_antimatching, Vertex, WeightedGraph};
use crate::kernel::{kernelize, ClaimCheck};

/// A (clique, stable set) partition of a split graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitProfile {
    /// Ascending.
    pub clique: Vec<Vertex>,
    /// Ascending.
    pub stable: Vec<Vertex>,
    /// Largest number of stable-side non-neighbors of a clique vertex.
    pub d: usize,
}

impl SplitProfile {
    /// Builds a profile from a claimed partition, checking it.
    pub fn from_parts(g: &WeightedGraph, mut clique: Vec<Vertex>, mut stable: Vec<Vertex>) -> Result<Self> {
        clique.sort_unstable();
        stable.sort_unstable();
        if clique.len() + stable.len() != g.n() {
            return Err(Error::MalformedInstance("split parts do not cover the graph".into()));
        }
        let mut all: Vec<_> = clique.iter().chain(&stable).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != g.n() {
            return Err(Error::MalformedInstance("split parts overlap".into()));
        }
        if !g.is_clique(&clique)? || !g.is_stable(&stable)? {
            return Err(Error::MalformedInstance("not a (clique, stable) partition".into()));
        }
        let d = clique
            .iter()
            .map(|&v| stable.iter().filter(|&&u| !g.has_edge(u, v)).count())
            .max()
            .unwrap_or(0);
        Ok(SplitProfile { clique, stable, d })
    }
}

/// Recognizes split graphs from the degree sequence.
///
/// With degrees sorted non-increasingly (ties by ascending id) and `m` the
/// largest index with `d_m >= m - 1`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`; the first `m` vertices are then
/// a maximum clique and the rest a stable set.
pub fn split_partition(g: &WeightedGraph) -> Option<SplitProfile> {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    // the qualifying indices form a prefix
    let m = degrees.iter().enumerate().take_while(|&(i, &d)| d >= i).count();
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let profile = SplitProfile::from_parts(g, order[..m].to_vec(), order[m..].to_vec());
    debug_assert!(profile.is_ok(), "degree condition implies a split partition");
    profile.ok()
}

/// `k^d`, saturating.
pub fn split_kernel_bound(k: u64, d: usize) -> u128 {
    let mut out: u128 = 1;
    for _ in 0..d {
        out = out.saturating_mul(k as u128);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub d: usize,
    /// `None` when kernelization decided the instance outright.
    pub kernel_size: Option<usize>,
    pub kernel_limit: u128,
    pub residual_clique: Option<usize>,
    pub checks: Vec<ClaimCheck>,
}

impl SplitReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Kernelizes `inst` and measures it against `k^d` and `2k - 2 + |K|`.
///
/// A graph with `d < 2` also satisfies the hypothesis for `d = 2`, so the
/// exponent used is `max(d, 2)`.
pub fn split_report(inst: &DualInstance, profile: &SplitProfile) -> SplitReport {
    let d = profile.d.max(2);
    let limit = split_kernel_bound(inst.k, d);
    let trace = kernelize(inst);
    let mut checks = Vec::new();
    let (mut kernel_size, mut residual_clique) = (None, None);
    if trace.shortcut.is_none() {
        let reduced = &trace.reduced.graph;
        let n = reduced.n();
        let clique = n - 2 * maximum_antimatching(reduced).len();
        checks.push(ClaimCheck {
            name: "split-kernel-size",
            passed: n as u128 <= limit,
            detail: format!("{n} vertices, limit k^{d} = {limit}"),
        });
        let sparse_limit = 2 * inst.k as u128 - 2 + clique as u128;
        checks.push(ClaimCheck {
            name: "residual-clique-kernel-size",
            passed: n as u128 <= sparse_limit,
            detail: format!("{n} vertices, limit 2k-2+|K| = {sparse_limit}"),
        });
        kernel_size = Some(n);
        residual_clique = Some(clique);
    }
    SplitReport {
        d: profile.d,
        kernel_size,
        kernel_limit: limit,
        residual_clique,
        checks,
    }
}

/// [`split_report`], failing with [`Error::ClaimViolation`] on the first
/// violated bound.
pub fn audit_split_bounds(inst: &DualInstance, profile: &SplitProfile) -> Result<SplitReport> {
    let report = split_report(inst, profile);
    match report.checks.iter().find(|c| !c.passed) {
        Some(c) => Err(Error::ClaimViolation {
            claim: c.name,
            detail: c.detail.clone(),
        }),
        None => Ok(report),
    }
}
