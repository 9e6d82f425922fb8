//! Set Cover instances and their reduction to split-graph Dual Weighted
//! Coloring.
//!
//! For a universe `U`, a family `S` and a budget `l`, the reduced graph has a
//! clique vertex of weight `l` per set and a stable vertex of weight `l + 1`
//! per element; a set vertex is adjacent to an element vertex iff the set
//! does *not* contain the element. With `k' = |U|(l + 1) - l`, the family
//! has a cover by at most `l` sets iff `sigma <= w(V) - k'`.

use crate::error::{Error, Result};
use crate::fpt::DualInstance;
use crate::graph::{Vertex, WeightedGraph};
use crate::lab::split::SplitProfile;

/// Largest family the brute-force cover search accepts.
pub const BRUTEFORCE_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetCoverInstance {
    universe: usize,
    /// Each set sorted and deduplicated.
    sets: Vec<Vec<usize>>,
    budget: usize,
}

impl SetCoverInstance {
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, budget: usize) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::MalformedInstance("the family is empty".into()));
        }
        if budget == 0 {
            return Err(Error::MalformedInstance("the budget must be at least 1".into()));
        }
        let mut normalized = Vec::with_capacity(sets.len());
        for (i, mut set) in sets.into_iter().enumerate() {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(Error::MalformedInstance(format!("set {i} is empty")));
            }
            if let Some(&e) = set.iter().find(|&&e| e >= universe) {
                return Err(Error::MalformedInstance(format!(
                    "set {i} contains element {e} outside a universe of size {universe}"
                )));
            }
            normalized.push(set);
        }
        Ok(SetCoverInstance {
            universe,
            sets: normalized,
            budget,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// `k' = |U|(l + 1) - l`.
pub fn reduced_parameter(universe: usize, budget: usize) -> u64 {
    (universe as u64) * (budget as u64 + 1) - budget as u64
}

/// Builds the split-graph instance. Set `i` becomes vertex `i`, element `e`
/// becomes vertex `|S| + e`.
pub fn reduce_setcover(sc: &SetCoverInstance) -> Result<DualInstance> {
    if sc.budget > sc.universe {
        return Err(Error::TrivialBudget {
            budget: sc.budget,
            universe: sc.universe,
        });
    }
    let sets = sc.sets.len();
    let n = sets + sc.universe;
    let mut edges = Vec::new();
    for u in 0..sets {
        for v in u + 1..sets {
            edges.push((u, v));
        }
    }
    for (i, set) in sc.sets.iter().enumerate() {
        for e in 0..sc.universe {
            if set.binary_search(&e).is_err() {
                edges.push((i, sets + e));
            }
        }
    }
    let budget = sc.budget as u64;
    let mut weights = vec![budget; sets];
    weights.extend(std::iter::repeat_n(budget + 1, sc.universe));
    let graph = WeightedGraph::new(n, &edges, weights)?;
    DualInstance::new(graph, reduced_parameter(sc.universe, sc.budget))
}

/// The (clique, stable) partition the reduction builds, with `d` equal to
/// the largest set size.
pub fn reduction_profile(sc: &SetCoverInstance, inst: &DualInstance) -> Result<SplitProfile> {
    let sets = sc.sets.len();
    let clique: Vec<Vertex> = (0..sets).collect();
    let stable: Vec<Vertex> = (sets..sets + sc.universe).collect();
    SplitProfile::from_parts(&inst.graph, clique, stable)
}

/// Whether at most `budget` sets cover the universe, by trying every
/// sub-family.
pub fn setcover_bruteforce(sc: &SetCoverInstance) -> Result<bool> {
    let sets = sc.sets.len();
    if sets > BRUTEFORCE_CAP {
        return Err(Error::InstanceTooLarge {
            size: sets,
            cap: BRUTEFORCE_CAP,
        });
    }
    let masks: Vec<u64> = sc
        .sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &e| m | (1 << e)))
        .collect();
    let everything = if sc.universe >= 64 { u64::MAX } else { (1u64 << sc.universe) - 1 };
    if sc.universe > 64 {
        return Err(Error::InstanceTooLarge {
            size: sc.universe,
            cap: 64,
        });
    }
    Ok((0u32..1 << sets)
        .filter(|choice| choice.count_ones() as usize <= sc.budget)
        .any(|choice| {
            let covered = (0..sets)
                .filter(|i| choice & (1 << i) != 0)
                .fold(0u64, |m, i| m | masks[i]);
            covered == everything
        }))
}
