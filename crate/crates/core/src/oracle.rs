//! Exponential-time ground truth.
//!
//! Every routine here is exact and deliberately simple. They exist to check
//! the FPT solver, the kernelizer and the generators on small instances.

use crate::error::{Error, Result};
use crate::graph::{WeightedGraph, Weight};

/// Default vertex cap for the subset oracles. The work is `3^n`.
pub const DEFAULT_CAP: usize = 22;

/// Vertex cap for [`maximum_matching_bruteforce`].
pub const MATCHING_CAP: usize = 12;

/// Subset oracle with a configurable size cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

/// Per-mask stability flag and class weight, indexed by vertex bitmask.
struct SubsetTables {
    stable: Vec<bool>,
    max_weight: Vec<Weight>,
    non_adjacent: Vec<u32>,
}

impl SubsetTables {
    fn new(g: &WeightedGraph) -> Self {
        let n = g.n();
        let full = (1u32 << n) - 1;
        let adjacent: Vec<u32> = g
            .vertices()
            .map(|v| g.neighbors(v).ones().fold(0u32, |m, u| m | (1 << u)))
            .collect();
        let size = 1usize << n;
        let mut stable = vec![true; size];
        let mut max_weight = vec![0; size];
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            stable[mask] = stable[rest] && adjacent[low] & rest as u32 == 0;
            max_weight[mask] = max_weight[rest].max(g.weight(low));
        }
        let non_adjacent = adjacent.iter().map(|a| !a & full).collect();
        SubsetTables {
            stable,
            max_weight,
            non_adjacent,
        }
    }

    /// Stable subsets of `x` that contain its lowest vertex.
    fn anchored_stable_subsets(&self, x: u32) -> impl Iterator<Item = u32> + '_ {
        let low = x & x.wrapping_neg();
        let rest = (x ^ low) & self.non_adjacent[low.trailing_zeros() as usize];
        let mut sub = rest;
        let mut done = false;
        std::iter::from_fn(move || {
            while !done {
                let s = sub | low;
                if sub == 0 {
                    done = true;
                } else {
                    sub = (sub - 1) & rest;
                }
                if self.stable[s as usize] {
                    return Some(s);
                }
            }
            None
        })
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Self {
        Oracle { cap }
    }

    fn check(&self, g: &WeightedGraph) -> Result<()> {
        // masks are u32
        let cap = self.cap.min(31);
        if g.n() > cap {
            return Err(Error::InstanceTooLarge { size: g.n(), cap });
        }
        Ok(())
    }

    /// The weighted chromatic number: the minimum weight of a proper
    /// coloring. The empty graph has weight 0.
    pub fn sigma(&self, g: &WeightedGraph) -> Result<Weight> {
        self.check(g)?;
        let n = g.n();
        if n == 0 {
            return Ok(0);
        }
        let tables = SubsetTables::new(g);
        let size = 1usize << n;
        let mut best = vec![Weight::MAX; size];
        best[0] = 0;
        for x in 1..size {
            let mut value = Weight::MAX;
            for s in tables.anchored_stable_subsets(x as u32) {
                let candidate = best[x ^ s as usize] + tables.max_weight[s as usize];
                value = value.min(candidate);
            }
            best[x] = value;
        }
        Ok(best[size - 1])
    }

    /// Minimum coloring weight over colorings with at most `r` classes;
    /// `None` when no such coloring exists.
    pub fn sigma_bounded(&self, g: &WeightedGraph, r: usize) -> Result<Option<Weight>> {
        self.check(g)?;
        if r == 0 {
            return Err(Error::PreconditionViolated("r must be at least 1".into()));
        }
        let n = g.n();
        if n == 0 {
            return Ok(Some(0));
        }
        let tables = SubsetTables::new(g);
        let size = 1usize << n;
        // layer[x] = best weight of x using at most `j` classes
        let mut layer = vec![Weight::MAX; size];
        layer[0] = 0;
        for _ in 0..r.min(n) {
            let mut next = vec![Weight::MAX; size];
            next[0] = 0;
            for x in 1..size {
                let mut value = Weight::MAX;
                for s in tables.anchored_stable_subsets(x as u32) {
                    let prev = layer[x ^ s as usize];
                    if prev != Weight::MAX {
                        value = value.min(prev + tables.max_weight[s as usize]);
                    }
                }
                next[x] = value;
            }
            layer = next;
        }
        let value = layer[size - 1];
        Ok((value != Weight::MAX).then_some(value))
    }

    /// Is `sigma(g) <= total_weight(g) - k`?
    pub fn decide_dual(&self, g: &WeightedGraph, k: u64) -> Result<bool> {
        let sigma = self.sigma(g)?;
        Ok(sigma as u128 + k as u128 <= g.total_weight() as u128)
    }
}

pub fn sigma_exact(g: &WeightedGraph) -> Result<Weight> {
    Oracle::default().sigma(g)
}

pub fn sigma_exact_bounded(g: &WeightedGraph, r: usize) -> Result<Option<Weight>> {
    Oracle::default().sigma_bounded(g, r)
}

pub fn decide_dual_oracle(g: &WeightedGraph, k: u64) -> Result<bool> {
    Oracle::default().decide_dual(g, k)
}

/// Maximum matching cardinality by exhaustive search over edge choices.
pub fn maximum_matching_bruteforce(g: &WeightedGraph) -> Result<usize> {
    if g.n() > MATCHING_CAP {
        return Err(Error::InstanceTooLarge {
            size: g.n(),
            cap: MATCHING_CAP,
        });
    }
    fn go(g: &WeightedGraph, free: u32) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        // leave v unmatched
        let mut best = go(g, rest);
        for u in g.neighbors(v).ones() {
            if rest & (1 << u) != 0 {
                best = best.max(1 + go(g, rest & !(1 << u)));
            }
        }
        best
    }
    Ok(go(g, ((1u64 << g.n()) - 1) as u32))
}
