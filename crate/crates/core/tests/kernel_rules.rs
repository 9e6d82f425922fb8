use dualcolor::graph::{maximum_antimatching, named};
use dualcolor::kernel::{canonical_no, canonical_yes, compute_classes, kernelize, rule1_exhaustive, rule2, Rule};
use dualcolor::lab::gen_tight_general;
use dualcolor::lab::random::planted_instance;
use dualcolor::oracle::decide_dual_oracle;
use dualcolor::{DualInstance, Verdict, WeightedGraph};

#[test]
fn rule1_examples() {
    let (out, deleted) = rule1_exhaustive(&DualInstance::new(named::complete(5), 2).unwrap());
    assert!(out.graph.is_empty());
    assert_eq!(deleted, vec![0, 1, 2, 3, 4]);

    let (out, deleted) = rule1_exhaustive(&DualInstance::new(named::star(3), 2).unwrap());
    assert_eq!(deleted, vec![0]);
    assert_eq!((out.graph.n(), out.graph.edge_count()), (3, 0));

    let (out, deleted) = rule1_exhaustive(&DualInstance::new(named::cycle(4), 2).unwrap());
    assert!(deleted.is_empty());
    assert_eq!(out.graph, named::cycle(4));
}

/// Pair (0, 1) plus five clique vertices 2..7 adjacent to 1 only among the
/// pair; they form one class of true twins.
fn twin_class() -> WeightedGraph {
    let mut edges = vec![];
    for v in 2..7 {
        edges.push((1, v));
        for u in v + 1..7 {
            edges.push((v, u));
        }
    }
    // a second non-edge so that |M| = 2 with every twin still in K
    edges.extend([(0, 7), (1, 7), (1, 8)]);
    for v in 2..7 {
        edges.push((v, 7));
        edges.push((v, 8));
    }
    WeightedGraph::new(9, &edges, vec![1, 1, 1, 2, 3, 4, 5, 1, 1]).unwrap()
}

#[test]
fn rule2_keeps_the_heaviest() {
    let g = twin_class();
    let m = maximum_antimatching(&g);
    assert_eq!(m.len(), 2);
    let part = compute_classes(&g, &m).unwrap();
    let class = part.classes.iter().find(|c| c.vertices.len() == 5).expect("five twins");
    assert_eq!(class.vertices, vec![2, 3, 4, 5, 6]);
    let (reduced, deleted) = rule2(&g, &m, &part).unwrap();
    assert_eq!(deleted, vec![2, 3, 4]);
    assert_eq!(reduced.n(), 6);
    let kept: Vec<_> = reduced.weights().to_vec();
    assert!(kept.contains(&5) && kept.contains(&4));
    for k in 1..6 {
        assert_eq!(decide_dual_oracle(&g, k).unwrap(), decide_dual_oracle(&reduced, k).unwrap());
    }
}

#[test]
fn rule2_without_overflow_deletes_nothing() {
    let inst = gen_tight_general(4).unwrap();
    let m = maximum_antimatching(&inst.graph);
    let part = compute_classes(&inst.graph, &m).unwrap();
    assert!(rule2(&inst.graph, &m, &part).unwrap().1.is_empty());
}

#[test]
fn kernelize_shortcuts() {
    let t = kernelize(&DualInstance::new(named::complete(5), 1).unwrap());
    assert_eq!(t.shortcut, Some(Verdict::No));
    assert_eq!(t.reduced, canonical_no(1));

    let t = kernelize(&DualInstance::new(WeightedGraph::edgeless(vec![1; 6]).unwrap(), 3).unwrap());
    assert_eq!(t.shortcut, Some(Verdict::Yes));
    assert_eq!(t.reduced, canonical_yes(3));
}

#[test]
fn planted_instances_trim_to_quota_and_replay() {
    let mut trimmed = 0;
    for seed in 0..40 {
        let k = 2 + seed % 4;
        let g = planted_instance(40, k as usize - 1, 3, 5, seed).unwrap();
        let inst = DualInstance::new(g, k).unwrap();
        let trace = kernelize(&inst);
        assert!(trace.shortcut.is_none());
        trimmed += trace.log.iter().any(|a| a.rule == Rule::ClassTrim) as usize;
        assert_eq!(trace.replay(&inst), trace.reduced);
        let m = maximum_antimatching(&trace.reduced.graph);
        let part = compute_classes(&trace.reduced.graph, &m).unwrap();
        assert!(part.largest_class() < k as usize);
        for (i, &orig) in trace.vertex_map.iter().enumerate() {
            assert_eq!(trace.reduced.graph.weight(i), inst.graph.weight(orig));
        }
    }
    // a palette of all-adjacent patterns leaves only universal vertices
    assert!(trimmed >= 30, "{trimmed}");
}
