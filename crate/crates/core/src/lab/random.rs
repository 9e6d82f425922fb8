//! Seeded random instance families. Every generator is a pure function of
//! its arguments.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Vertex, Weight, WeightedGraph};
use crate::lab::interval::{Interval, IntervalRepresentation};
use crate::lab::split::SplitProfile;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn weights(rng: &mut ChaCha8Rng, n: usize, max_weight: Weight) -> Result<Vec<Weight>> {
    if max_weight == 0 {
        return Err(Error::InvalidParameter);
    }
    Ok((0..n).map(|_| rng.gen_range(1..=max_weight)).collect())
}

/// `G(n, p)` with weights uniform in `1..=max_weight`.
pub fn random_graph(n: usize, p: f64, max_weight: Weight, seed: u64) -> Result<WeightedGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter);
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let w = weights(&mut rng, n, max_weight)?;
    WeightedGraph::new(n, &edges, w)
}

/// A split graph on `clique + stable` vertices (clique first) where every
/// clique vertex misses between 0 and `d` stable vertices; vertex 0 misses
/// exactly `min(d, stable)`.
pub fn random_split(
    clique: usize,
    stable: usize,
    d: usize,
    max_weight: Weight,
    seed: u64,
) -> Result<(WeightedGraph, SplitProfile)> {
    let mut rng = rng(seed);
    let n = clique + stable;
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((u, v));
        }
    }
    let stable_ids: Vec<Vertex> = (clique..n).collect();
    for u in 0..clique {
        let misses = if u == 0 { d.min(stable) } else { rng.gen_range(0..=d.min(stable)) };
        let missed: Vec<Vertex> = stable_ids.choose_multiple(&mut rng, misses).copied().collect();
        for &s in &stable_ids {
            if !missed.contains(&s) {
                edges.push((u, s));
            }
        }
    }
    let w = weights(&mut rng, n, max_weight)?;
    let g = WeightedGraph::new(n, &edges, w)?;
    let profile = SplitProfile::from_parts(&g, (0..clique).collect(), stable_ids)?;
    Ok((g, profile))
}

/// `n` intervals with left endpoints uniform in `0..span` and lengths
/// uniform in `0..=max_len`.
pub fn random_intervals(n: usize, span: i64, max_len: i64, max_weight: Weight, seed: u64) -> Result<IntervalRepresentation> {
    if span <= 0 || max_len < 0 {
        return Err(Error::InvalidParameter);
    }
    let mut rng = rng(seed);
    let intervals = (0..n)
        .map(|_| {
            let left = rng.gen_range(0..span);
            Interval::new(left, left + rng.gen_range(0..=max_len))
        })
        .collect();
    let w = weights(&mut rng, n, max_weight)?;
    IntervalRepresentation::new(intervals, w)
}

/// An instance whose maximum antimatching has exactly `pairs` non-edges.
///
/// Vertices `2i, 2i + 1` form pair `i`; the rest form a clique. Every
/// non-edge has an even endpoint, so no antimatching can exceed `pairs`.
/// Clique vertices draw their non-neighbors among the even vertices from a
/// palette of `palette` random patterns; even vertices are pairwise
/// non-adjacent with probability one half.
pub fn planted_instance(n: usize, pairs: usize, palette: usize, max_weight: Weight, seed: u64) -> Result<WeightedGraph> {
    if 2 * pairs > n || palette == 0 {
        return Err(Error::InvalidParameter);
    }
    let mut rng = rng(seed);
    let ground = 2 * pairs;
    let patterns: Vec<Vec<bool>> = (0..palette)
        .map(|_| (0..pairs).map(|_| rng.gen_bool(0.5)).collect())
        .collect();
    let mut edges = Vec::new();
    for u in 0..ground {
        for v in u + 1..ground {
            let paired = u % 2 == 0 && v == u + 1;
            let both_even = u % 2 == 0 && v % 2 == 0;
            if !paired && !(both_even && rng.gen_bool(0.5)) {
                edges.push((u, v));
            }
        }
    }
    for v in ground..n {
        let pattern = &patterns[rng.gen_range(0..palette)];
        for (i, &missed) in pattern.iter().enumerate() {
            edges.push((2 * i + 1, v));
            if !missed {
                edges.push((2 * i, v));
            }
        }
        for u in ground..v {
            edges.push((u, v));
        }
    }
    let w = weights(&mut rng, n, max_weight)?;
    WeightedGraph::new(n, &edges, w)
}

/// Relabels `g` by a seeded random permutation; returns the graph and the
/// permutation (`new id -> old id`).
pub fn shuffle_labels(g: &WeightedGraph, seed: u64) -> (WeightedGraph, Vec<Vertex>) {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(&mut rng(seed));
    (g.induced(&order), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::maximum_antimatching;

    #[test]
    fn deterministic() {
        assert_eq!(random_graph(12, 0.4, 5, 9).unwrap(), random_graph(12, 0.4, 5, 9).unwrap());
        assert_ne!(random_graph(12, 0.4, 5, 9).unwrap(), random_graph(12, 0.4, 5, 10).unwrap());
    }

    #[test]
    fn planted_antimatching_size() {
        for seed in 0..20 {
            let g = planted_instance(40, 4, 6, 9, seed).unwrap();
            assert_eq!(maximum_antimatching(&g).len(), 4);
            let (h, _) = shuffle_labels(&g, seed);
            assert_eq!(maximum_antimatching(&h).len(), 4);
        }
    }

    #[test]
    fn split_profile_has_requested_d() {
        for seed in 0..20 {
            let (g, profile) = random_split(6, 5, 3, 4, seed).unwrap();
            assert_eq!(profile.d, 3);
            assert!(g.is_clique(&profile.clique).unwrap());
        }
    }
}
