//! Interval graphs given by an explicit representation.
//!
//! Intervals are closed with integer endpoints; `u ~ v` iff
//! `max(l_u, l_v) <= min(r_u, r_v)`. Recognition from adjacency alone is not
//! supported: interval instances always travel with their intervals.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::fpt::DualInstance;
use crate::graph::{maximum_antimatching, Vertex, Weight, WeightedGraph};
use crate::kernel::{compute_classes, kernelize, ClaimCheck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub left: i64,
    pub right: i64,
}

impl Interval {
    pub fn new(left: i64, right: i64) -> Self {
        Interval { left, right }
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.left.max(other.left) <= self.right.min(other.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalRepresentation {
    intervals: Vec<Interval>,
    weights: Vec<Weight>,
}

impl IntervalRepresentation {
    pub fn new(intervals: Vec<Interval>, weights: Vec<Weight>) -> Result<Self> {
        if intervals.len() != weights.len() {
            return Err(Error::ArityMismatch {
                expected: intervals.len(),
                actual: weights.len(),
            });
        }
        for (v, iv) in intervals.iter().enumerate() {
            if iv.left > iv.right {
                return Err(Error::InvalidInterval {
                    vertex: v,
                    left: iv.left,
                    right: iv.right,
                });
            }
        }
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeight { vertex: v, weight: 0 });
        }
        Ok(IntervalRepresentation { intervals, weights })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// The representation of the subgraph induced by `keep`, relabeled so
    /// that `keep[i]` becomes vertex `i`.
    pub fn restrict(&self, keep: &[Vertex]) -> IntervalRepresentation {
        IntervalRepresentation {
            intervals: keep.iter().map(|&v| self.intervals[v]).collect(),
            weights: keep.iter().map(|&v| self.weights[v]).collect(),
        }
    }

    pub fn to_graph(&self) -> WeightedGraph {
        let n = self.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.intervals[u].intersects(&self.intervals[v]) {
                    edges.push((u, v));
                }
            }
        }
        WeightedGraph::new(n, &edges, self.weights.clone()).expect("validated representation")
    }

    /// Maximal cliques from a left-to-right endpoint sweep. Each clique is
    /// the set of intervals alive just before the first right endpoint that
    /// follows a left endpoint; the sweep order is a consecutive-ones order.
    pub fn maximal_cliques(&self) -> Vec<Vec<Vertex>> {
        let mut starts: BTreeMap<i64, Vec<Vertex>> = BTreeMap::new();
        let mut ends: BTreeMap<i64, Vec<Vertex>> = BTreeMap::new();
        for (v, iv) in self.intervals.iter().enumerate() {
            starts.entry(iv.left).or_default().push(v);
            ends.entry(iv.right).or_default().push(v);
        }
        let coords: BTreeSet<i64> = starts.keys().chain(ends.keys()).copied().collect();
        let mut alive = BTreeSet::new();
        let mut grew = false;
        let mut cliques = Vec::new();
        for x in coords {
            if let Some(vs) = starts.get(&x) {
                alive.extend(vs.iter().copied());
                grew = true;
            }
            if let Some(vs) = ends.get(&x) {
                if grew {
                    cliques.push(alive.iter().copied().collect());
                    grew = false;
                }
                for v in vs {
                    alive.remove(v);
                }
            }
        }
        cliques
    }
}

pub fn intervals_to_graph(rep: &IntervalRepresentation) -> WeightedGraph {
    rep.to_graph()
}

pub fn maximal_cliques_ordered(rep: &IntervalRepresentation) -> Vec<Vec<Vertex>> {
    rep.maximal_cliques()
}

/// For each vertex, the first and last index of the cliques containing it,
/// or `None` if it is in none. Panics if some vertex's cliques are not
/// contiguous.
pub fn clique_spans(cliques: &[Vec<Vertex>], n: usize) -> Vec<Option<(usize, usize)>> {
    let mut spans: Vec<Option<(usize, usize)>> = vec![None; n];
    for (i, clique) in cliques.iter().enumerate() {
        for &v in clique {
            spans[v] = match spans[v] {
                None => Some((i, i)),
                Some((l, r)) => {
                    assert_eq!(r + 1, i, "vertex {v} is not in consecutive cliques");
                    Some((l, i))
                }
            };
        }
    }
    spans
}

/// `k^3 - 2k^2 + 2k - 1`.
pub fn interval_kernel_bound(k: u64) -> u128 {
    let k = k as u128;
    k * k * k + 2 * k - 2 * k * k - 1
}

/// `floor((p+1)/2) * ceil((p+1)/2) - 1`.
pub fn interval_class_bound(p: usize) -> usize {
    let lo = p.div_ceil(2);
    let hi = (p + 1).div_ceil(2);
    (lo * hi).saturating_sub(1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalReport {
    /// Maximal cliques of the input graph.
    pub cliques: usize,
    pub antimatching_size: usize,
    /// `None` when kernelization decided the instance outright.
    pub kernel_size: Option<usize>,
    pub kernel_limit: u128,
    pub kernel_cliques: Option<usize>,
    pub kernel_classes: Option<usize>,
    pub checks: Vec<ClaimCheck>,
}

impl IntervalReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Measures the interval-specific bounds without failing.
pub fn interval_report(inst: &DualInstance, rep: &IntervalRepresentation) -> IntervalReport {
    let g = &inst.graph;
    let p = rep.maximal_cliques().len();
    let antimatching = maximum_antimatching(g);
    let mut checks = vec![ClaimCheck {
        name: "cliques-at-most-twice-antimatching",
        passed: p < 2 || p <= 2 * antimatching.len(),
        detail: format!("p = {p}, |M| = {}", antimatching.len()),
    }];

    let trace = kernelize(inst);
    let limit = interval_kernel_bound(inst.k);
    let (mut kernel_size, mut kernel_cliques, mut kernel_classes) = (None, None, None);
    if trace.shortcut.is_none() {
        let reduced = &trace.reduced.graph;
        let n = reduced.n();
        checks.push(ClaimCheck {
            name: "interval-kernel-size",
            passed: n as u128 <= limit,
            detail: format!("{n} vertices, limit {limit}"),
        });
        let sub = rep.restrict(&trace.vertex_map);
        let q = sub.maximal_cliques().len();
        let m = maximum_antimatching(reduced);
        let classes = compute_classes(reduced, &m)
            .map(|p| p.classes.len())
            .unwrap_or(usize::MAX);
        let class_limit = interval_class_bound(q);
        checks.push(ClaimCheck {
            name: "interval-class-count",
            passed: classes <= class_limit,
            detail: format!("{classes} classes over {q} maximal cliques, limit {class_limit}"),
        });
        kernel_size = Some(n);
        kernel_cliques = Some(q);
        kernel_classes = Some(classes);
    }
    IntervalReport {
        cliques: p,
        antimatching_size: antimatching.len(),
        kernel_size,
        kernel_limit: limit,
        kernel_cliques,
        kernel_classes,
        checks,
    }
}

/// [`interval_report`], failing with [`Error::ClaimViolation`] on the first
/// violated bound.
pub fn audit_interval_bounds(inst: &DualInstance, rep: &IntervalRepresentation) -> Result<IntervalReport> {
    let report = interval_report(inst, rep);
    match report.checks.iter().find(|c| !c.passed) {
        Some(c) => Err(Error::ClaimViolation {
            claim: c.name,
            detail: c.detail.clone(),
        }),
        None => Ok(report),
    }
}
