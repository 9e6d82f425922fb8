//! The `9^k · poly(n)` decision procedure for Dual Weighted Coloring.
//!
//! A maximum antimatching `M` is computed first. If `|M| >= k`, pairing the
//! endpoints of every non-edge of `M` already saves `k`, so the answer is
//! yes. Otherwise `V(M)` has fewer than `2k` vertices, the remaining vertices
//! form a clique `K = v_1, ..., v_|K|`, and a dynamic program over subsets of
//! `V(M)` computes the weighted chromatic number exactly:
//!
//! * `T(X, i)` is the cheapest coloring of `X ∪ K` in which `v_1..v_|K|` have
//!   distinct colors `c_1..c_|K|` and only `c_1..c_i` may be shared with
//!   vertices of `X`.
//! * `T(∅, i) = w(K)`.
//! * `T(X, 0) = min { T(X \ S, 0) + w(S) }` over non-empty stable `S ⊆ X`.
//! * `T(X, i) = min(T(X, i-1), min { T(X \ S, i-1) + w(S ∪ {v_i}) - w(v_i) })`
//!   over non-empty `S ⊆ X` with `S ∪ {v_i}` stable.
//!
//! `T(V(M), |K|)` is the weighted chromatic number.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{maximum_antimatching, Antimatching, Coloring, Vertex, Weight, WeightedGraph};

/// Largest `|V(M)|` the subset table accepts. Beyond this the table would not
/// fit in memory anyway.
pub const MAX_DP_GROUND: usize = 26;

/// A weighted graph together with the savings parameter `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualInstance {
    pub graph: WeightedGraph,
    pub k: u64,
}

impl DualInstance {
    pub fn new(graph: WeightedGraph, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter);
        }
        Ok(DualInstance { graph, k })
    }

    /// Whether `sigma <= total_weight - k` for this instance.
    pub fn accepts(&self, sigma: Weight) -> bool {
        sigma as u128 + self.k as u128 <= self.graph.total_weight() as u128
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
}

impl Verdict {
    pub fn from_bool(yes: bool) -> Self {
        if yes {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
        })
    }
}

/// Which part of the procedure settled the instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Empty graph, or `k >= total_weight`.
    Trivial,
    /// `|M| >= k`.
    Antimatching,
    /// Subset dynamic program.
    DynamicProgram,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveStats {
    pub n: usize,
    pub m: usize,
    pub antimatching_size: Option<usize>,
    pub clique_size: Option<usize>,
    pub branch: Branch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualAnswer {
    pub verdict: Verdict,
    /// Exact weighted chromatic number when it was computed.
    pub sigma: Option<Weight>,
    pub certificate: Option<Coloring>,
    pub stats: SolveStats,
}

/// Decides whether `sigma(G, w) <= w(V) - k`.
///
/// When the dynamic program runs, `sigma` is exact and the certificate is an
/// optimal coloring. When the antimatching shortcut fires, the certificate
/// has weight at most `w(V) - k` and `sigma` is left unknown.
///
/// Fails only when `|V(M)|` exceeds [`MAX_DP_GROUND`].
pub fn solve_dual(inst: &DualInstance) -> Result<DualAnswer> {
    let g = &inst.graph;
    let mut stats = SolveStats {
        n: g.n(),
        m: g.edge_count(),
        antimatching_size: None,
        clique_size: None,
        branch: Branch::Trivial,
    };
    if g.is_empty() {
        return Ok(DualAnswer {
            verdict: Verdict::No,
            sigma: Some(0),
            certificate: Some(Coloring::default()),
            stats,
        });
    }
    // sigma >= 1 on a non-empty graph
    if inst.k >= g.total_weight() {
        return Ok(DualAnswer {
            verdict: Verdict::No,
            sigma: None,
            certificate: None,
            stats,
        });
    }

    let antimatching = maximum_antimatching(g);
    stats.antimatching_size = Some(antimatching.len());
    stats.clique_size = Some(g.n() - 2 * antimatching.len());
    if antimatching.len() as u64 >= inst.k {
        stats.branch = Branch::Antimatching;
        let certificate = shortcut_certificate(g, &antimatching, inst.k)?;
        return Ok(DualAnswer {
            verdict: Verdict::Yes,
            sigma: None,
            certificate: Some(certificate),
            stats,
        });
    }

    stats.branch = Branch::DynamicProgram;
    let table = build_dp(g, &antimatching)?;
    let sigma = table.optimum();
    Ok(DualAnswer {
        verdict: Verdict::from_bool(inst.accepts(sigma)),
        sigma: Some(sigma),
        certificate: Some(extract_certificate(&table)),
        stats,
    })
}

/// `sigma(G, w)` with an optimal coloring, by the dynamic program over a
/// maximum antimatching. Exponential only in `|V(M)|`.
pub fn weighted_chromatic_number(g: &WeightedGraph) -> Result<(Weight, Coloring)> {
    if g.is_empty() {
        return Ok((0, Coloring::default()));
    }
    let table = build_dp(g, &maximum_antimatching(g))?;
    Ok((table.optimum(), extract_certificate(&table)))
}

/// Colors each non-edge of `antimatching` with its own color and every other
/// vertex with a fresh one. Each pair saves at least 1 since weights are
/// positive integers.
pub fn shortcut_certificate(g: &WeightedGraph, antimatching: &Antimatching, k: u64) -> Result<Coloring> {
    if (antimatching.len() as u64) < k {
        return Err(Error::PreconditionViolated(format!(
            "antimatching of size {} cannot certify k = {k}",
            antimatching.len()
        )));
    }
    let mut classes: Vec<Vec<Vertex>> = antimatching.pairs().iter().map(|&(u, v)| vec![u, v]).collect();
    classes.extend(antimatching.residual_clique(g).into_iter().map(|v| vec![v]));
    Ok(Coloring::new(classes))
}

/// The filled subset table, with the chosen set per cell for certificate
/// reconstruction.
#[derive(Clone, Debug)]
pub struct DpTable {
    ground: Vec<Vertex>,
    clique: Vec<Vertex>,
    values: Vec<Weight>,
    // chosen S per cell; 0 means the color was skipped (only for i > 0)
    choices: Vec<u32>,
}

impl DpTable {
    /// `V(M)` in ascending order; bit `j` of a subset mask is `ground()[j]`.
    pub fn ground(&self) -> &[Vertex] {
        &self.ground
    }

    /// `v_1..v_|K|` in ascending id order.
    pub fn clique(&self) -> &[Vertex] {
        &self.clique
    }

    fn width(&self) -> usize {
        1 << self.ground.len()
    }

    fn cell(&self, subset: u32, i: usize) -> usize {
        i * self.width() + subset as usize
    }

    /// `T(X, i)` for `X` given as a bitmask over [`DpTable::ground`].
    pub fn value(&self, subset: u32, i: usize) -> Weight {
        self.values[self.cell(subset, i)]
    }

    /// `T(V(M), |K|)`.
    pub fn optimum(&self) -> Weight {
        self.value(self.full(), self.clique.len())
    }

    pub fn full(&self) -> u32 {
        (self.width() - 1) as u32
    }

    /// Translates a subset mask into vertex ids.
    pub fn members(&self, subset: u32) -> Vec<Vertex> {
        self.ground
            .iter()
            .enumerate()
            .filter(|(j, _)| subset & (1 << j) != 0)
            .map(|(_, &v)| v)
            .collect()
    }
}

/// Fills `T(X, i)` for every `X ⊆ V(M)` and `i` in `0..=|K|`.
///
/// `antimatching` must be maximum for the result to equal the weighted
/// chromatic number: that is what makes `K` a clique.
pub fn build_dp(g: &WeightedGraph, antimatching: &Antimatching) -> Result<DpTable> {
    let ground = antimatching.vertices();
    let clique = antimatching.residual_clique(g);
    if ground.len() > MAX_DP_GROUND {
        return Err(Error::InstanceTooLarge {
            size: ground.len(),
            cap: MAX_DP_GROUND,
        });
    }
    let width = 1usize << ground.len();
    let bit_of = |v: Vertex| ground.iter().position(|&u| u == v);
    let ground_mask = |vs: &mut dyn Iterator<Item = Vertex>| -> u32 {
        vs.filter_map(bit_of).fold(0, |m, j| m | (1 << j))
    };

    let adjacent: Vec<u32> = ground.iter().map(|&v| ground_mask(&mut g.neighbors(v).ones())).collect();
    let mut stable = vec![true; width];
    let mut max_weight: Vec<Weight> = vec![0; width];
    for mask in 1..width {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        stable[mask] = stable[rest] && adjacent[low] & rest as u32 == 0;
        max_weight[mask] = max_weight[rest].max(g.weight(ground[low]));
    }
    let full = (width - 1) as u32;
    let non_adjacent: Vec<u32> = adjacent.iter().map(|a| !a & full).collect();

    let layers = clique.len() + 1;
    let clique_weight: Weight = clique.iter().map(|&v| g.weight(v)).sum();
    let mut values = vec![Weight::MAX; layers * width];
    let mut choices = vec![0u32; layers * width];

    // i = 0: only fresh colors on X; anchor S at the lowest vertex of X
    values[0] = clique_weight;
    for x in 1..width {
        let low = x & x.wrapping_neg();
        let rest = (x ^ low) as u32 & non_adjacent[low.trailing_zeros() as usize];
        let (mut best, mut best_set) = (Weight::MAX, 0);
        let mut sub = rest;
        loop {
            let s = sub | low as u32;
            if stable[s as usize] {
                let candidate = values[x ^ s as usize] + max_weight[s as usize];
                if candidate < best {
                    best = candidate;
                    best_set = s;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        values[x] = best;
        choices[x] = best_set;
    }

    for (idx, &v) in clique.iter().enumerate() {
        let i = idx + 1;
        let w_v = g.weight(v);
        let allowed = ground_mask(&mut g.non_neighbors(v).ones());
        let (prev, cur) = values.split_at_mut(i * width);
        let prev = &prev[(i - 1) * width..];
        let cur = &mut cur[..width];
        let cur_choice = &mut choices[i * width..(i + 1) * width];
        cur[0] = clique_weight;
        for x in 1..width {
            let (mut best, mut best_set) = (prev[x], 0);
            let candidates = x as u32 & allowed;
            let mut s = candidates;
            while s != 0 {
                if stable[s as usize] {
                    let candidate = prev[x ^ s as usize] + max_weight[s as usize].max(w_v) - w_v;
                    if candidate < best {
                        best = candidate;
                        best_set = s;
                    }
                }
                s = (s - 1) & candidates;
            }
            cur[x] = best;
            cur_choice[x] = best_set;
        }
    }

    Ok(DpTable {
        ground,
        clique,
        values,
        choices,
    })
}

/// Walks the stored choices back from `T(V(M), |K|)` and returns a proper
/// coloring whose weight equals the optimum.
pub fn extract_certificate(table: &DpTable) -> Coloring {
    let mut classes: Vec<Vec<Vertex>> = table.clique.iter().map(|&v| vec![v]).collect();
    let mut x = table.full();
    for i in (1..=table.clique.len()).rev() {
        let s = table.choices[table.cell(x, i)];
        if s != 0 {
            classes[i - 1].extend(table.members(s));
            x ^= s;
        }
    }
    while x != 0 {
        let s = table.choices[table.cell(x, 0)];
        classes.push(table.members(s));
        x ^= s;
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    Coloring::new(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::oracle::{decide_dual_oracle, sigma_exact};

    fn inst(n: usize, edges: &[(usize, usize)], w: &[Weight], k: u64) -> DualInstance {
        DualInstance::new(WeightedGraph::new(n, edges, w.to_vec()).unwrap(), k).unwrap()
    }

    #[test]
    fn k_must_be_positive() {
        assert_eq!(
            DualInstance::new(named::path(2), 0),
            Err(Error::InvalidParameter)
        );
    }

    #[test]
    fn solve_examples() {
        let ans = solve_dual(&inst(2, &[(0, 1)], &[3, 5], 1)).unwrap();
        assert_eq!(ans.verdict, Verdict::No);
        assert_eq!(ans.sigma, Some(8));

        // |M| = 1 < 4, so the table decides; the optimum pairs both vertices
        let i = inst(2, &[], &[4, 4], 4);
        let ans = solve_dual(&i).unwrap();
        assert_eq!(ans.verdict, Verdict::Yes);
        let cert = ans.certificate.unwrap();
        assert_eq!(cert.classes(), &[vec![0, 1]]);
        assert_eq!(i.graph.coloring_weight(&cert).unwrap(), 4);
    }

    #[test]
    fn shortcut_fires_when_antimatching_is_large() {
        let i = inst(4, &[], &[1, 1, 1, 1], 2);
        let ans = solve_dual(&i).unwrap();
        assert_eq!(ans.stats.branch, Branch::Antimatching);
        assert_eq!(ans.verdict, Verdict::Yes);
        assert_eq!(ans.sigma, None);
        let cert = ans.certificate.unwrap();
        assert!(i.graph.is_proper(&cert).unwrap());
        assert_eq!(i.graph.coloring_weight(&cert).unwrap(), 2);
    }

    #[test]
    fn shortcut_certificate_examples() {
        let g = WeightedGraph::edgeless(vec![1; 4]).unwrap();
        let m = Antimatching::new(&g, vec![(0, 1), (2, 3)]).unwrap();
        let c = shortcut_certificate(&g, &m, 2).unwrap();
        assert_eq!(c.classes(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(g.coloring_weight(&c).unwrap(), 2);

        let g = WeightedGraph::new(3, &[(0, 1)], vec![2, 2, 2]).unwrap();
        let m = Antimatching::new(&g, vec![(0, 2)]).unwrap();
        let c = shortcut_certificate(&g, &m, 1).unwrap();
        assert_eq!(c.classes(), &[vec![0, 2], vec![1]]);
        assert_eq!(g.coloring_weight(&c).unwrap(), 4);

        let g = WeightedGraph::edgeless(vec![1; 10]).unwrap();
        let m = Antimatching::new(&g, (0..5).map(|i| (2 * i, 2 * i + 1)).collect()).unwrap();
        let c = shortcut_certificate(&g, &m, 5).unwrap();
        assert_eq!(g.coloring_weight(&c).unwrap(), 5);
        assert!(matches!(
            shortcut_certificate(&g, &m, 6),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn dp_examples() {
        let p3 = WeightedGraph::new(3, &[(0, 1), (1, 2)], vec![1, 2, 1]).unwrap();
        let m = maximum_antimatching(&p3);
        assert_eq!(m.pairs(), &[(0, 2)]);
        let t = build_dp(&p3, &m).unwrap();
        assert_eq!(t.clique(), &[1]);
        assert_eq!(t.value(0b11, 1), 3);
        assert_eq!(t.optimum(), sigma_exact(&p3).unwrap());
        let c = extract_certificate(&t).normalized();
        assert_eq!(c.classes(), &[vec![0, 2], vec![1]]);

        let k3 = named::complete(3);
        let m = maximum_antimatching(&k3);
        let t = build_dp(&k3, &m).unwrap();
        assert_eq!(t.value(0, 3), 3);
        assert_eq!(extract_certificate(&t).classes(), &[vec![0], vec![1], vec![2]]);

        let paw = named::paw();
        let m = maximum_antimatching(&paw);
        assert_eq!(m.len(), 1);
        assert!(m.pairs()[0] == (1, 3) || m.pairs()[0] == (2, 3));
        let t = build_dp(&paw, &m).unwrap();
        assert_eq!(t.optimum(), 3);
        assert_eq!(sigma_exact(&paw).unwrap(), 3);
    }

    #[test]
    fn trivial_branches() {
        let empty = DualInstance::new(WeightedGraph::empty(), 1).unwrap();
        let ans = solve_dual(&empty).unwrap();
        assert_eq!(ans.verdict, Verdict::No);
        assert_eq!(ans.sigma, Some(0));

        let big_k = inst(3, &[], &[1, 1, 1], 3);
        let ans = solve_dual(&big_k).unwrap();
        assert_eq!(ans.verdict, Verdict::No);
        assert_eq!(ans.stats.branch, Branch::Trivial);
    }

    #[test]
    fn table_is_monotone_in_i_and_certificate_matches() {
        let g = WeightedGraph::new(
            6,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (1, 4), (0, 5), (4, 5)],
            vec![3, 1, 4, 1, 5, 2],
        )
        .unwrap();
        let m = maximum_antimatching(&g);
        let t = build_dp(&g, &m).unwrap();
        for i in 1..=t.clique().len() {
            for x in 0..=t.full() {
                assert!(t.value(x, i) <= t.value(x, i - 1));
            }
        }
        let c = extract_certificate(&t);
        assert!(g.is_proper(&c).unwrap());
        assert_eq!(g.coloring_weight(&c).unwrap(), t.optimum());
        assert_eq!(t.optimum(), sigma_exact(&g).unwrap());
        for k in 1..=g.total_weight() {
            let ans = solve_dual(&DualInstance::new(g.clone(), k).unwrap()).unwrap();
            assert_eq!(ans.verdict.is_yes(), decide_dual_oracle(&g, k).unwrap());
        }
    }
}
