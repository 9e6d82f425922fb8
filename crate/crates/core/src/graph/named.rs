//! Small named graphs with unit weights, handy in tests and examples.

use super::{Vertex, WeightedGraph};

fn unit(n: usize, edges: &[(Vertex, Vertex)]) -> WeightedGraph {
    WeightedGraph::new(n, edges, vec![1; n]).expect("named graphs are well formed")
}

pub fn path(n: usize) -> WeightedGraph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    unit(n, &edges)
}

pub fn cycle(n: usize) -> WeightedGraph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    unit(n, &edges)
}

pub fn complete(n: usize) -> WeightedGraph {
    WeightedGraph::complete(vec![1; n]).expect("complete graph")
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> WeightedGraph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    unit(leaves + 1, &edges)
}

/// Triangle `0, 1, 2` plus a pendant vertex `3` attached to `0`.
pub fn paw() -> WeightedGraph {
    unit(4, &[(0, 1), (1, 2), (0, 2), (0, 3)])
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> WeightedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    unit(10, &edges)
}
