use proptest::prelude::*;

use dualcolor::graph::{maximum_antimatching, maximum_matching};
use dualcolor::kernel::{compute_classes, kernel_bound, kernelize};
use dualcolor::oracle::{decide_dual_oracle, maximum_matching_bruteforce, sigma_exact};
use dualcolor::{solve_dual, DualInstance, WeightedGraph};

fn graph(max_n: usize, max_w: u64) -> impl Strategy<Value = WeightedGraph> {
    (0..=max_n).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            proptest::collection::vec(any::<bool>(), pairs),
            proptest::collection::vec(1..=max_w, n),
        )
            .prop_map(move |(bits, weights)| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                WeightedGraph::new(n, &edges, weights).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solver_agrees_with_oracle(g in graph(9, 6), k in 1u64..12) {
        let inst = DualInstance::new(g.clone(), k).unwrap();
        let ans = solve_dual(&inst).unwrap();
        prop_assert_eq!(ans.verdict.is_yes(), decide_dual_oracle(&g, k).unwrap());
        if let Some(sigma) = ans.sigma {
            prop_assert_eq!(sigma, sigma_exact(&g).unwrap());
        }
        if let Some(cert) = &ans.certificate {
            prop_assert!(g.is_proper(cert).unwrap());
            let weight = g.coloring_weight(cert).unwrap();
            if ans.verdict.is_yes() {
                prop_assert!(weight + k <= g.total_weight());
            }
        }
    }

    #[test]
    fn kernel_is_sound_small_and_idempotent(g in graph(10, 4), k in 1u64..6) {
        let inst = DualInstance::new(g.clone(), k).unwrap();
        let trace = kernelize(&inst);
        prop_assert_eq!(
            decide_dual_oracle(&g, k).unwrap(),
            decide_dual_oracle(&trace.reduced.graph, k).unwrap()
        );
        prop_assert_eq!(trace.reduced.k, k);
        if trace.shortcut.is_none() {
            prop_assert_eq!(trace.replay(&inst), trace.reduced.clone());
            let deleted: u64 = trace.log.iter().flat_map(|a| &a.deleted).map(|&v| g.weight(v)).sum();
            prop_assert_eq!(trace.reduced.graph.total_weight() + deleted, g.total_weight());
            prop_assert!(trace.reduced.graph.n() as u128 <= kernel_bound(k).unwrap());
            let m = maximum_antimatching(&trace.reduced.graph);
            prop_assert!(m.len() < k as usize);
            let part = compute_classes(&trace.reduced.graph, &m).unwrap();
            prop_assert!(part.largest_class() <= m.len());
            let again = kernelize(&trace.reduced);
            prop_assert!(again.log.is_empty());
            prop_assert!(again.shortcut.is_none());
        }
    }

    #[test]
    fn blossom_is_maximum(g in graph(11, 1)) {
        let pairs = maximum_matching(&g);
        let mut seen = vec![false; g.n()];
        for &(u, v) in &pairs {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
        prop_assert_eq!(pairs.len(), maximum_matching_bruteforce(&g).unwrap());
    }

    #[test]
    fn residual_clique_is_a_clique(g in graph(12, 1)) {
        let m = maximum_antimatching(&g);
        prop_assert!(g.is_clique(&m.residual_clique(&g)).unwrap());
    }
}
