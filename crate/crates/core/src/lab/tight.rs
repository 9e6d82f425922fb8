//! Instances attaining the kernel size bounds.

use crate::error::{Error, Result};
use crate::fpt::DualInstance;
use crate::graph::{maximum_antimatching, Vertex, WeightedGraph};
use crate::kernel::{compute_classes, kernel_bound, kernelize};
use crate::lab::interval::{clique_spans, interval_kernel_bound, Interval, IntervalRepresentation};

fn require_k(k: u64) -> Result<usize> {
    if k < 2 {
        return Err(Error::PreconditionViolated(format!("tight instances need k >= 2, got {k}")));
    }
    if k > 20 {
        return Err(Error::InstanceTooLarge { size: k as usize, cap: 20 });
    }
    Ok(k as usize)
}

fn check(cond: bool, claim: &'static str, detail: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ClaimViolation { claim, detail: detail() })
    }
}

/// A unit-weight instance with `(2^{k-1} + 1)(k - 1)` vertices on which
/// neither reduction rule fires.
///
/// Layout: `x_i = 2i`, `y_i = 2i + 1` for `i < k - 1` form the antimatching;
/// `x_i` is the missing vertex of its pair and the pairs are the only
/// non-edges inside `{x, y}`. Then, for every non-empty `s` in increasing
/// bitmask order, `k - 1` clique vertices adjacent to everything except the
/// `x_i` with `i` in `s`.
pub fn gen_tight_general(k: u64) -> Result<DualInstance> {
    let k_us = require_k(k)?;
    let pairs = k_us - 1;
    let ground = 2 * pairs;
    let subsets = (1usize << pairs) - 1;
    let n = ground + subsets * pairs;

    let mut edges = Vec::new();
    for u in 0..ground {
        for v in u + 1..ground {
            if !(u % 2 == 0 && v == u + 1) {
                edges.push((u, v));
            }
        }
    }
    for s in 1..=subsets {
        for c in 0..pairs {
            let v = ground + (s - 1) * pairs + c;
            for i in 0..pairs {
                edges.push((2 * i + 1, v));
                if s & (1 << i) == 0 {
                    edges.push((2 * i, v));
                }
            }
        }
    }
    for u in ground..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    let inst = DualInstance::new(WeightedGraph::new(n, &edges, vec![1; n])?, k)?;
    self_check_general(&inst, pairs)?;
    Ok(inst)
}

fn self_check_general(inst: &DualInstance, pairs: usize) -> Result<()> {
    let g = &inst.graph;
    let expected = kernel_bound(inst.k).map(|b| b as usize);
    check(Some(g.n()) == expected, "tight-general-size", || {
        format!("{} vertices, expected {expected:?}", g.n())
    })?;
    let universal = g.vertices().find(|&v| g.degree(v) + 1 == g.n());
    check(universal.is_none(), "tight-general-no-universal", || {
        format!("vertex {universal:?} is universal")
    })?;
    let m = maximum_antimatching(g);
    check(m.len() == pairs, "tight-general-antimatching", || {
        format!("maximum antimatching {} instead of {pairs}", m.len())
    })?;
    let part = compute_classes(g, &m)?;
    check(part.largest_class() <= pairs, "tight-general-class-size", || {
        format!("a class has {} vertices", part.largest_class())
    })?;
    let trace = kernelize(inst);
    check(
        trace.shortcut.is_none() && trace.log.is_empty(),
        "tight-general-fixpoint",
        || format!("kernelization changed the instance: {:?}", trace.log),
    )
}

/// A unit-weight interval instance with `k^3 - 2k^2 + 2k - 1` vertices and
/// `p = 2k - 2` maximal cliques.
///
/// Exclusive vertices `e_t = [t, t]` for `t = 1..=p` take ids `0..p`; then,
/// for `i` in `1..=k-1` and `j` in `k-1..=p` with `(i, j) != (1, p)`, `k - 1`
/// copies of `[i, j]`.
///
/// The vertex and clique counts match the bound, but for `k >= 3` the
/// maximum antimatching exceeds `k - 1`: two exclusive vertices away from
/// clique `k - 1` each miss some clique vertex, giving an augmenting path.
/// The instance is therefore decided by the antimatching shortcut rather than
/// being a kernelization fixpoint; the generator does not claim otherwise.
pub fn gen_tight_interval(k: u64) -> Result<(DualInstance, IntervalRepresentation)> {
    let k_us = require_k(k)?;
    let p = 2 * k_us - 2;
    let mid = k_us - 1;
    let mut intervals: Vec<Interval> = (1..=p as i64).map(|t| Interval::new(t, t)).collect();
    for i in 1..=mid {
        for j in mid..=p {
            if (i, j) == (1, p) {
                continue;
            }
            for _ in 0..k_us - 1 {
                intervals.push(Interval::new(i as i64, j as i64));
            }
        }
    }
    let n = intervals.len();
    let rep = IntervalRepresentation::new(intervals, vec![1; n])?;
    let inst = DualInstance::new(rep.to_graph(), k)?;
    self_check_interval(&inst, &rep, p)?;
    Ok((inst, rep))
}

fn self_check_interval(inst: &DualInstance, rep: &IntervalRepresentation, p: usize) -> Result<()> {
    let g = &inst.graph;
    let expected = interval_kernel_bound(inst.k);
    check(g.n() as u128 == expected, "tight-interval-size", || {
        format!("{} vertices, expected {expected}", g.n())
    })?;
    let cliques = rep.maximal_cliques();
    check(cliques.len() == p, "tight-interval-cliques", || {
        format!("{} maximal cliques, expected {p}", cliques.len())
    })?;
    for (t, clique) in cliques.iter().enumerate() {
        check(clique.contains(&(t as Vertex)), "tight-interval-exclusive", || {
            format!("clique {t} lacks its exclusive vertex")
        })?;
    }
    let spans = clique_spans(&cliques, g.n());
    check(spans.iter().all(Option::is_some), "tight-interval-spans", || {
        "a vertex lies in no maximal clique".into()
    })?;
    let universal = g.vertices().find(|&v| g.degree(v) + 1 == g.n());
    check(universal.is_none(), "tight-interval-no-universal", || {
        format!("vertex {universal:?} is universal")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::claim_report;
    use crate::oracle::maximum_matching_bruteforce;

    #[test]
    fn general_counts() {
        for (k, n) in [(2, 3), (3, 10), (4, 27), (5, 68), (6, 165)] {
            let inst = gen_tight_general(k).unwrap();
            assert_eq!(inst.graph.n(), n);
            let m = maximum_antimatching(&inst.graph);
            let part = compute_classes(&inst.graph, &m).unwrap();
            let report = claim_report(&inst.graph, &m, &part);
            assert!(report.all_passed());
            assert_eq!(report.normal_classes, (1 << (k - 1)) - 1);
            assert_eq!(report.special_classes, 0);
        }
    }

    #[test]
    fn general_antimatching_matches_bruteforce() {
        let inst = gen_tight_general(3).unwrap();
        assert_eq!(maximum_matching_bruteforce(&inst.graph.complement()).unwrap(), 2);
    }

    #[test]
    fn interval_counts() {
        for (k, n) in [(2, 3), (3, 14), (4, 39), (5, 84)] {
            let (inst, rep) = gen_tight_interval(k).unwrap();
            assert_eq!(inst.graph.n(), n);
            assert_eq!(rep.maximal_cliques().len(), 2 * k as usize - 2);
        }
    }

    #[test]
    fn interval_antimatching_outgrows_the_budget() {
        let (inst, _) = gen_tight_interval(2).unwrap();
        assert_eq!(maximum_antimatching(&inst.graph).len(), 1);
        for k in 3..=5 {
            let (inst, _) = gen_tight_interval(k).unwrap();
            assert!(maximum_antimatching(&inst.graph).len() as u64 >= k);
        }
    }

    #[test]
    fn small_k_rejected() {
        assert!(matches!(gen_tight_general(1), Err(Error::PreconditionViolated(_))));
        assert!(matches!(gen_tight_interval(0), Err(Error::PreconditionViolated(_))));
    }
}
