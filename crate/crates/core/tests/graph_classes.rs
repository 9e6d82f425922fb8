//! Split recognition, interval structure and the class-specific bounds.

use dualcolor::graph::maximum_antimatching;
use dualcolor::kernel::kernelize;
use dualcolor::lab::interval::{clique_spans, interval_report, Interval, IntervalRepresentation};
use dualcolor::lab::random::random_intervals;
use dualcolor::lab::split::{split_partition, split_report, SplitProfile};
use dualcolor::{DualInstance, WeightedGraph};

fn all_graphs(n: usize) -> impl Iterator<Item = WeightedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0usize..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        WeightedGraph::new(n, &edges, vec![1; n]).unwrap()
    })
}

/// Largest clique side over all (clique, stable) partitions, or `None`.
fn best_split_exhaustive(g: &WeightedGraph) -> Option<usize> {
    let n = g.n();
    (0u32..1 << n)
        .filter_map(|mask| {
            let clique: Vec<_> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let stable: Vec<_> = (0..n).filter(|&v| mask & (1 << v) == 0).collect();
            SplitProfile::from_parts(g, clique.clone(), stable).ok().map(|_| clique.len())
        })
        .max()
}

#[test]
fn split_recognition_matches_exhaustive_partitioning() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            let fast = split_partition(&g);
            let slow = best_split_exhaustive(&g);
            assert_eq!(fast.as_ref().map(|p| p.clique.len()), slow, "{:?}", g.edges());
        }
    }
}

#[test]
fn split_recognition_on_sampled_larger_graphs() {
    for seed in 0..400 {
        let n = 7 + (seed % 4) as usize;
        let g = dualcolor::lab::random::random_graph(n, 0.5, 1, seed).unwrap();
        let slow = best_split_exhaustive(&g);
        assert_eq!(split_partition(&g).map(|p| p.clique.len()), slow);
    }
    for seed in 0..200 {
        let (g, _) = dualcolor::lab::random::random_split(6, 4, 2, 3, seed).unwrap();
        assert!(split_partition(&g).is_some());
    }
}

/// Clique 0..8 with stable vertices 8 and 9; 0, 6 and 7 miss both, so
/// d = 2. Every non-edge touches 8 or 9, hence the maximum antimatching has
/// 2 pairs, and no class of the residual clique overflows. With k = 3 the
/// 10-vertex instance is its own kernel, above k^d = 9 while within
/// 2k - 2 + |K| = 10.
#[test]
fn power_bound_fails_on_a_unit_weight_split_graph() {
    let mut edges = Vec::new();
    for u in 0..8 {
        for v in u + 1..8 {
            edges.push((u, v));
        }
    }
    edges.extend([(1, 8), (3, 8), (4, 8), (2, 9), (5, 9)]);
    let g = WeightedGraph::new(10, &edges, vec![1; 10]).unwrap();
    let inst = DualInstance::new(g, 3).unwrap();
    let profile = SplitProfile::from_parts(&inst.graph, (0..8).collect(), vec![8, 9]).unwrap();
    assert_eq!(profile.d, 2);
    assert_eq!(maximum_antimatching(&inst.graph).len(), 2);

    let trace = kernelize(&inst);
    assert!(trace.shortcut.is_none());
    assert!(trace.log.is_empty());
    let report = split_report(&inst, &profile);
    assert_eq!(report.kernel_size, Some(10));
    let power = report.checks.iter().find(|c| c.name == "split-kernel-size").unwrap();
    let sparse = report.checks.iter().find(|c| c.name == "residual-clique-kernel-size").unwrap();
    assert!(!power.passed);
    assert!(sparse.passed);
}

fn rep(iv: &[(i64, i64)]) -> IntervalRepresentation {
    IntervalRepresentation::new(iv.iter().map(|&(l, r)| Interval::new(l, r)).collect(), vec![1; iv.len()]).unwrap()
}

/// Three disjoint intervals: three maximal cliques but every antimatching
/// has one pair, so `p <= 2|M|` fails. An odd number of isolated vertices
/// always gives `p = 2|M| + 1`.
#[test]
fn clique_count_can_exceed_twice_the_antimatching() {
    for n in [3usize, 5, 7] {
        let r = rep(&(0..n as i64).map(|i| (2 * i, 2 * i)).collect::<Vec<_>>());
        let g = r.to_graph();
        let p = r.maximal_cliques().len();
        let m = maximum_antimatching(&g).len();
        assert_eq!(p, 2 * m + 1);
    }
    let r = rep(&[(0, 0), (2, 2), (4, 4)]);
    let inst = DualInstance::new(r.to_graph(), 2).unwrap();
    let report = interval_report(&inst, &r);
    assert!(!report.checks[0].passed);
    // the instance is its own kernel and still meets the size bound
    assert_eq!(report.kernel_size, Some(3));
    assert!(report.checks[1..].iter().all(|c| c.passed));
}

#[test]
fn sweep_cliques_are_maximal_and_contiguous() {
    for seed in 0..300 {
        let r = random_intervals(3 + (seed % 20) as usize, 25, 7, 1, seed).unwrap();
        let g = r.to_graph();
        let cliques = r.maximal_cliques();
        let spans = clique_spans(&cliques, g.n());
        assert!(spans.iter().all(Option::is_some));
        for c in &cliques {
            assert!(g.is_clique(c).unwrap());
            let extendable = g.vertices().any(|v| !c.contains(&v) && c.iter().all(|&u| g.has_edge(u, v)));
            assert!(!extendable, "clique {c:?} is not maximal");
        }
        for pair in cliques.windows(2) {
            assert!(pair[0].iter().any(|v| !pair[1].contains(v)));
            assert!(pair[1].iter().any(|v| !pair[0].contains(v)));
        }
    }
}
