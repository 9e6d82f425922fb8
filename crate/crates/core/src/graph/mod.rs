//! Vertex-weighted simple graphs and the coloring semantics built on them.
//!
//! Adjacency is stored as one bitset per vertex. Vertex ids are dense
//! `0..n`, every weight is a positive integer, and the sum of all weights is
//! guaranteed to fit in a [`Weight`], so every derived sum is exact.

mod matching;
pub mod named;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use matching::{maximum_antimatching, maximum_matching, Antimatching};

pub type Vertex = usize;
pub type Weight = u64;
pub type VertexSet = FixedBitSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    adjacency: Vec<VertexSet>,
    weights: Vec<Weight>,
    edge_count: usize,
    total_weight: Weight,
}

impl WeightedGraph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Edges are unordered; `(u, v)` and `(v, u)` denote the same edge and
    /// listing both is a [`Error::DuplicateEdge`].
    pub fn new(n: usize, edges: &[(Vertex, Vertex)], weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                actual: weights.len(),
            });
        }
        let mut total: Weight = 0;
        for (v, &w) in weights.iter().enumerate() {
            if w == 0 {
                return Err(Error::InvalidWeight {
                    vertex: v,
                    weight: 0,
                });
            }
            total = total.checked_add(w).ok_or(Error::WeightOverflow)?;
        }
        let mut adjacency = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex(u));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v));
            }
            if u == v {
                return Err(Error::MalformedEdge(u));
            }
            if adjacency[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(WeightedGraph {
            adjacency,
            weights,
            edge_count: edges.len(),
            total_weight: total,
        })
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        WeightedGraph {
            adjacency: Vec::new(),
            weights: Vec::new(),
            edge_count: 0,
            total_weight: 0,
        }
    }

    /// Complete graph on `weights.len()` vertices.
    pub fn complete(weights: Vec<Weight>) -> Result<Self> {
        let n = weights.len();
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::new(n, &edges, weights)
    }

    /// Edgeless graph on `weights.len()` vertices.
    pub fn edgeless(weights: Vec<Weight>) -> Result<Self> {
        Self::new(weights.len(), &[], weights)
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn weight(&self, v: Vertex) -> Weight {
        self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Sum of all vertex weights, the value of the all-singleton coloring.
    pub fn total_weight(&self) -> Weight {
        self.total_weight
    }

    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].count_ones(..)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in self.vertices() {
            out.extend(self.adjacency[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Non-neighbors of `v`, excluding `v` itself.
    pub fn non_neighbors(&self, v: Vertex) -> VertexSet {
        let mut set = self.adjacency[v].clone();
        set.toggle_range(..);
        set.set(v, false);
        set
    }

    /// Same vertices and weights; the edge set is exactly the non-edges.
    pub fn complement(&self) -> WeightedGraph {
        let n = self.n();
        let adjacency: Vec<_> = self.vertices().map(|v| self.non_neighbors(v)).collect();
        WeightedGraph {
            adjacency,
            weights: self.weights.clone(),
            edge_count: n * n.saturating_sub(1) / 2 - self.edge_count,
            total_weight: self.total_weight,
        }
    }

    /// Subgraph induced by `keep`; vertex `keep[i]` becomes vertex `i`.
    pub fn induced(&self, keep: &[Vertex]) -> WeightedGraph {
        let n = keep.len();
        let mut adjacency = vec![FixedBitSet::with_capacity(n); n];
        let mut edge_count = 0;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                    edge_count += 1;
                }
            }
        }
        let weights: Vec<_> = keep.iter().map(|&v| self.weights[v]).collect();
        let total_weight = weights.iter().sum();
        WeightedGraph {
            adjacency,
            weights,
            edge_count,
            total_weight,
        }
    }

    /// Deletes `removed` and relabels the survivors in ascending id order.
    /// Returns the new graph and, for each new id, the old id.
    pub fn without(&self, removed: &[Vertex]) -> (WeightedGraph, Vec<Vertex>) {
        let mut gone = FixedBitSet::with_capacity(self.n());
        for &v in removed {
            gone.insert(v);
        }
        let keep: Vec<_> = self.vertices().filter(|&v| !gone.contains(v)).collect();
        (self.induced(&keep), keep)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    pub fn is_stable(&self, set: &[Vertex]) -> Result<bool> {
        for &v in set {
            self.check_vertex(v)?;
        }
        Ok(set
            .iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v))))
    }

    pub fn is_clique(&self, set: &[Vertex]) -> Result<bool> {
        for &v in set {
            self.check_vertex(v)?;
        }
        Ok(set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..]
                .iter()
                .all(|&v| u == v || self.has_edge(u, v))
        }))
    }

    /// Adjacent to every other vertex.
    pub fn is_universal(&self, v: Vertex) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.degree(v) + 1 == self.n())
    }

    /// Twins in the open-neighborhood sense: `N(u) = N(v)`. Twins are never
    /// adjacent.
    pub fn are_twins(&self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.adjacency[u] == self.adjacency[v])
    }

    /// Twins in the closed-neighborhood sense: `N[u] = N[v]`. This is the
    /// relation between two vertices of one equivalence class of the
    /// residual clique.
    pub fn are_true_twins(&self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(true);
        }
        let mut nu = self.adjacency[u].clone();
        nu.insert(u);
        let mut nv = self.adjacency[v].clone();
        nv.insert(v);
        Ok(nu == nv)
    }

    /// Heaviest weight in `set`, the weight of a color class; 0 when empty.
    pub fn class_weight(&self, set: &[Vertex]) -> Weight {
        set.iter().map(|&v| self.weights[v]).max().unwrap_or(0)
    }

    fn check_partition(&self, coloring: &Coloring) -> Result<()> {
        let mut seen = FixedBitSet::with_capacity(self.n());
        for class in coloring.classes() {
            if class.is_empty() {
                return Err(Error::InvalidColoring("empty color class".into()));
            }
            for &v in class {
                self.check_vertex(v)?;
                if seen.put(v) {
                    return Err(Error::InvalidColoring(format!(
                        "vertex {v} appears in two classes"
                    )));
                }
            }
        }
        if seen.count_ones(..) != self.n() {
            let missing = seen.zeroes().next().unwrap_or_default();
            return Err(Error::InvalidColoring(format!(
                "vertex {missing} is not colored"
            )));
        }
        Ok(())
    }

    /// Sum over classes of the heaviest vertex in the class.
    pub fn coloring_weight(&self, coloring: &Coloring) -> Result<Weight> {
        self.check_partition(coloring)?;
        Ok(coloring.classes().iter().map(|c| self.class_weight(c)).sum())
    }

    /// Whether every class is a stable set.
    pub fn is_proper(&self, coloring: &Coloring) -> Result<bool> {
        self.check_partition(coloring)?;
        for class in coloring.classes() {
            if !self.is_stable(class)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// An ordered partition of the vertex set into color classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coloring {
    classes: Vec<Vec<Vertex>>,
}

impl Coloring {
    /// Wraps `classes` as given. Partition and stability are checked
    /// against a graph by [`WeightedGraph::coloring_weight`] and
    /// [`WeightedGraph::is_proper`].
    pub fn new(classes: Vec<Vec<Vertex>>) -> Self {
        Coloring { classes }
    }

    /// Every vertex in its own class.
    pub fn singletons(n: usize) -> Self {
        Coloring {
            classes: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn into_classes(self) -> Vec<Vec<Vertex>> {
        self.classes
    }

    /// Sorts vertices inside each class and classes by their smallest vertex.
    pub fn normalized(mut self) -> Self {
        for class in &mut self.classes {
            class.sort_unstable();
        }
        self.classes.sort();
        self
    }

    /// Maps every vertex through `map` (e.g. reduced ids back to originals).
    pub fn relabel(&self, map: &[Vertex]) -> Coloring {
        Coloring {
            classes: self
                .classes
                .iter()
                .map(|c| c.iter().map(|&v| map[v]).collect())
                .collect(),
        }
    }
}
