//! Maximum-cardinality matching on general graphs (Edmonds' blossom
//! algorithm) and its complement-side counterpart, the maximum antimatching.
//!
//! The scan order is fixed: a greedy pass matches the lowest free vertex to
//! its lowest free neighbor, then augmenting paths are searched from free
//! roots in ascending id order with neighbors visited in ascending id order.
//! The same input therefore always yields the same matching.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::{Vertex, VertexSet, WeightedGraph};
use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

/// A maximum-cardinality matching of `g`, as pairs `(u, v)` with `u < v`
/// sorted by `u`.
pub fn maximum_matching(g: &WeightedGraph) -> Vec<(Vertex, Vertex)> {
    let adjacency: Vec<&VertexSet> = g.vertices().map(|v| g.neighbors(v)).collect();
    Blossom::new(&adjacency).run()
}

struct Blossom<'a> {
    adj: &'a [&'a VertexSet],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [&'a VertexSet]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Vec<(Vertex, Vertex)> {
        let n = self.adj.len();
        for v in 0..n {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(u) = self.adj[v].ones().find(|&u| self.mate[u] == NONE) {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        (0..n)
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| (v, self.mate[v]))
            .collect()
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.adj[v].ones() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

/// A set of pairwise vertex-disjoint non-edges: a matching in the complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Antimatching {
    pairs: Vec<(Vertex, Vertex)>,
}

impl Antimatching {
    /// Validates `pairs` against `g`: every pair must be a non-edge between
    /// two distinct vertices and no vertex may appear twice.
    pub fn new(g: &WeightedGraph, pairs: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let mut seen = FixedBitSet::with_capacity(g.n());
        let mut normalized = Vec::with_capacity(pairs.len());
        for (u, v) in pairs {
            for x in [u, v] {
                if x >= g.n() {
                    return Err(Error::InvalidVertex(x));
                }
            }
            if u == v || g.has_edge(u, v) {
                return Err(Error::InvalidAntimatching(format!(
                    "({u}, {v}) is not a non-edge"
                )));
            }
            if seen.put(u) || seen.put(v) {
                return Err(Error::InvalidAntimatching(format!(
                    "pair ({u}, {v}) shares a vertex with another pair"
                )));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Antimatching { pairs: normalized })
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `V(M)`: every endpoint, as a set over `0..n`.
    pub fn vertex_set(&self, n: usize) -> VertexSet {
        let mut set = FixedBitSet::with_capacity(n);
        for &(u, v) in &self.pairs {
            set.insert(u);
            set.insert(v);
        }
        set
    }

    /// Endpoints in ascending order.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out: Vec<_> = self.pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        out.sort_unstable();
        out
    }

    /// `V(G) \ V(M)` in ascending order. A clique whenever the antimatching
    /// is maximum.
    pub fn residual_clique(&self, g: &WeightedGraph) -> Vec<Vertex> {
        let covered = self.vertex_set(g.n());
        g.vertices().filter(|&v| !covered.contains(v)).collect()
    }
}

/// A maximum antimatching of `g`, computed as a maximum matching of the
/// complement.
pub fn maximum_antimatching(g: &WeightedGraph) -> Antimatching {
    let complement: Vec<VertexSet> = g.vertices().map(|v| g.non_neighbors(v)).collect();
    let refs: Vec<&VertexSet> = complement.iter().collect();
    Antimatching {
        pairs: Blossom::new(&refs).run(),
    }
}
