//! Kernelization for Dual Weighted Coloring.
//!
//! Two reduction rules are applied to a global fixpoint:
//!
//! 1. delete every universal vertex (it is a singleton in every coloring);
//! 2. with `M` a maximum antimatching and `K = V \ V(M)`, group the clique
//!    `K` into classes of equal neighborhood inside `V(M)` and keep only the
//!    `|M|` heaviest vertices of each class.
//!
//! If `|M| >= k` at any point the instance is a yes-instance and a constant
//! size yes-instance is emitted instead. A reduced instance has at most
//! `(2^(k-1) + 1)(k - 1)` vertices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fpt::{DualInstance, Verdict};
use crate::graph::{maximum_antimatching, Antimatching, Vertex, VertexSet, WeightedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Special,
    Normal,
}

/// One class of the residual clique: vertices with the same neighborhood
/// inside `V(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    /// Ascending.
    pub vertices: Vec<Vertex>,
    /// Neighborhood inside `V(M)`, ascending.
    pub signature: Vec<Vertex>,
    /// Special when it misses both endpoints of some non-edge of `M`.
    pub kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonEdgeProfile {
    pub pair: (Vertex, Vertex),
    /// Special when some class misses both endpoints.
    pub kind: Kind,
    /// For a normal non-edge, the endpoint that some class is not adjacent
    /// to, if any class misses an endpoint at all.
    pub missing: Option<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    /// The residual clique `K`, ascending.
    pub ground: Vec<Vertex>,
    /// Ordered by smallest member.
    pub classes: Vec<EquivalenceClass>,
    /// One entry per non-edge of `M`, in the antimatching's order.
    pub non_edges: Vec<NonEdgeProfile>,
}

impl ClassPartition {
    pub fn special_non_edges(&self) -> usize {
        self.non_edges.iter().filter(|e| e.kind == Kind::Special).count()
    }

    pub fn normal_non_edges(&self) -> usize {
        self.non_edges.iter().filter(|e| e.kind == Kind::Normal).count()
    }

    pub fn special_classes(&self) -> usize {
        self.classes.iter().filter(|c| c.kind == Kind::Special).count()
    }

    pub fn normal_classes(&self) -> usize {
        self.classes.iter().filter(|c| c.kind == Kind::Normal).count()
    }

    pub fn largest_class(&self) -> usize {
        self.classes.iter().map(|c| c.vertices.len()).max().unwrap_or(0)
    }
}

/// How many endpoints of `(x, y)` a class with neighborhood `sig` sees.
fn endpoints_seen(sig: &VertexSet, (x, y): (Vertex, Vertex)) -> usize {
    sig.contains(x) as usize + sig.contains(y) as usize
}

struct RawClasses {
    ground: Vec<Vertex>,
    members: Vec<Vec<Vertex>>,
    signatures: Vec<VertexSet>,
}

fn group_by_signature(g: &WeightedGraph, antimatching: &Antimatching) -> RawClasses {
    let covered = antimatching.vertex_set(g.n());
    let ground = antimatching.residual_clique(g);
    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    let mut members: Vec<Vec<Vertex>> = Vec::new();
    let mut signatures = Vec::new();
    for &v in &ground {
        let mut sig = g.neighbors(v).clone();
        sig.intersect_with(&covered);
        let slot = *index.entry(sig.clone()).or_insert_with(|| {
            members.push(Vec::new());
            signatures.push(sig);
            members.len() - 1
        });
        members[slot].push(v);
    }
    RawClasses {
        ground,
        members,
        signatures,
    }
}

/// Partitions the residual clique by neighborhood inside `V(M)` and tags
/// classes and non-edges as special or normal.
///
/// `antimatching` must be maximum. A supplied antimatching that can be
/// enlarged by swapping one of its non-edges for two (the patterns ruled
/// out for maximum antimatchings) is reported as
/// [`Error::NonMaximalAntimatchingWitness`].
pub fn compute_classes(g: &WeightedGraph, antimatching: &Antimatching) -> Result<ClassPartition> {
    let raw = group_by_signature(g, antimatching);
    if !g.is_clique(&raw.ground)? {
        return Err(Error::NonMaximalAntimatchingWitness(
            "the residual vertices do not form a clique".into(),
        ));
    }
    if let Some(detail) = claim1_violation(antimatching, &raw).or_else(|| claim3_violation(antimatching, &raw)) {
        return Err(Error::NonMaximalAntimatchingWitness(detail));
    }

    let mut class_special = vec![false; raw.members.len()];
    let mut non_edges = Vec::with_capacity(antimatching.len());
    for &(x, y) in antimatching.pairs() {
        let mut special = false;
        let mut missing = None;
        for (c, sig) in raw.signatures.iter().enumerate() {
            match (sig.contains(x), sig.contains(y)) {
                (false, false) => {
                    special = true;
                    class_special[c] = true;
                }
                (false, true) => missing = Some(x),
                (true, false) => missing = Some(y),
                (true, true) => {}
            }
        }
        non_edges.push(if special {
            NonEdgeProfile {
                pair: (x, y),
                kind: Kind::Special,
                missing: None,
            }
        } else {
            NonEdgeProfile {
                pair: (x, y),
                kind: Kind::Normal,
                missing,
            }
        });
    }

    let classes = raw
        .members
        .into_iter()
        .zip(raw.signatures)
        .zip(class_special)
        .map(|((vertices, sig), special)| EquivalenceClass {
            vertices,
            signature: sig.ones().collect(),
            kind: if special { Kind::Special } else { Kind::Normal },
        })
        .collect();
    Ok(ClassPartition {
        ground: raw.ground,
        classes,
        non_edges,
    })
}

fn claim1_violation(antimatching: &Antimatching, raw: &RawClasses) -> Option<String> {
    for (members, sig) in raw.members.iter().zip(&raw.signatures) {
        if members.len() < 2 {
            continue;
        }
        for &e in antimatching.pairs() {
            if endpoints_seen(sig, e) == 0 {
                return Some(format!(
                    "class {:?} sees neither endpoint of non-edge {:?}",
                    members, e
                ));
            }
        }
    }
    None
}

fn claim3_violation(antimatching: &Antimatching, raw: &RawClasses) -> Option<String> {
    for &(x, y) in antimatching.pairs() {
        let misses_x = raw.signatures.iter().position(|s| !s.contains(x));
        let misses_y = raw.signatures.iter().position(|s| !s.contains(y));
        if let (Some(a), Some(b)) = (misses_x, misses_y) {
            // one class missing both endpoints is the special pattern; a
            // second class missing either endpoint still crosses it
            let crossed = a != b
                || raw
                    .signatures
                    .iter()
                    .enumerate()
                    .any(|(c, s)| c != a && (!s.contains(x) || !s.contains(y)));
            if crossed {
                return Some(format!(
                    "classes {:?} and {:?} miss opposite endpoints of non-edge ({x}, {y})",
                    raw.members[a], raw.members[b]
                ));
            }
        }
    }
    None
}

/// Deletes universal vertices until none is left. `k` is unchanged.
/// Returns the reduced instance and the deleted vertices (input ids,
/// ascending).
pub fn rule1_exhaustive(inst: &DualInstance) -> (DualInstance, Vec<Vertex>) {
    let g = &inst.graph;
    // deleting a universal vertex never makes another vertex universal, so
    // one sweep reaches the fixpoint
    let deleted: Vec<Vertex> = g
        .vertices()
        .filter(|&v| g.degree(v) + 1 == g.n())
        .collect();
    let (reduced, _) = g.without(&deleted);
    (
        DualInstance {
            graph: reduced,
            k: inst.k,
        },
        deleted,
    )
}

/// In every class larger than `|M|`, keeps the `|M|` heaviest vertices (ties
/// to the smaller id) and deletes the rest. Returns the reduced graph and the
/// deleted vertices (input ids, ascending).
pub fn rule2(
    g: &WeightedGraph,
    antimatching: &Antimatching,
    partition: &ClassPartition,
) -> Result<(WeightedGraph, Vec<Vertex>)> {
    let quota = antimatching.len();
    if quota == 0 {
        return Err(Error::PreconditionViolated(
            "Rule 2 needs a non-empty antimatching".into(),
        ));
    }
    let mut deleted = Vec::new();
    for class in &partition.classes {
        if class.vertices.len() <= quota {
            continue;
        }
        let mut order = class.vertices.clone();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.weight(v)), v));
        deleted.extend_from_slice(&order[quota..]);
    }
    deleted.sort_unstable();
    let (reduced, _) = g.without(&deleted);
    Ok((reduced, deleted))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Universal vertex deletion.
    Universal,
    /// Class trimming to `|M|` vertices.
    ClassTrim,
}

impl Rule {
    pub fn id(self) -> u8 {
        match self {
            Rule::Universal => 1,
            Rule::ClassTrim => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleApplication {
    pub rule: Rule,
    /// Deleted vertices, as ids of the original instance.
    pub deleted: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelTrace {
    pub reduced: DualInstance,
    pub log: Vec<RuleApplication>,
    /// Reduced vertex id -> original vertex id. Empty when `shortcut` is set,
    /// since the canonical instances share no vertices with the input.
    pub vertex_map: Vec<Vertex>,
    /// Set when the reduction decided the instance outright and `reduced`
    /// is one of the canonical instances.
    pub shortcut: Option<Verdict>,
}

impl KernelTrace {
    /// Total number of deleted vertices across the log.
    pub fn deleted_count(&self) -> usize {
        self.log.iter().map(|a| a.deleted.len()).sum()
    }

    /// Applies the logged deletions to `original`. Without a shortcut the
    /// result equals `reduced`.
    pub fn replay(&self, original: &DualInstance) -> DualInstance {
        let removed: Vec<Vertex> = self.log.iter().flat_map(|a| a.deleted.iter().copied()).collect();
        let (graph, _) = original.graph.without(&removed);
        DualInstance {
            graph,
            k: original.k,
        }
    }
}

/// Two non-adjacent vertices of weight `k`: `sigma = k = 2k - k`.
pub fn canonical_yes(k: u64) -> DualInstance {
    let graph = WeightedGraph::edgeless(vec![k, k]).expect("k >= 1");
    DualInstance { graph, k }
}

/// A single vertex of weight 1: `sigma = 1 > 1 - k`.
pub fn canonical_no(k: u64) -> DualInstance {
    let graph = WeightedGraph::edgeless(vec![1]).expect("unit weight");
    DualInstance { graph, k }
}

/// `(2^(k-1) + 1)(k - 1)`, or `None` if it does not fit in a `u128`.
pub fn kernel_bound(k: u64) -> Option<u128> {
    if k == 0 {
        return Some(0);
    }
    let pow = 1u128.checked_shl(u32::try_from(k - 1).ok()?)?;
    (pow + 1).checked_mul(k as u128 - 1)
}

/// Applies Rule 1 and Rule 2 to a global fixpoint.
pub fn kernelize(inst: &DualInstance) -> KernelTrace {
    let k = inst.k;
    let mut graph = inst.graph.clone();
    let mut map: Vec<Vertex> = graph.vertices().collect();
    let mut log = Vec::new();
    let done = |shortcut: Verdict, log: Vec<RuleApplication>| KernelTrace {
        reduced: match shortcut {
            Verdict::Yes => canonical_yes(k),
            Verdict::No => canonical_no(k),
        },
        log,
        vertex_map: Vec::new(),
        shortcut: Some(shortcut),
    };

    loop {
        let (reduced, deleted) = rule1_exhaustive(&DualInstance { graph, k });
        graph = reduced.graph;
        log.extend(deleted.iter().map(|&v| RuleApplication {
            rule: Rule::Universal,
            deleted: vec![map[v]],
        }));
        retain_unlisted(&mut map, &deleted);

        if graph.is_empty() {
            return done(Verdict::No, log);
        }
        let antimatching = maximum_antimatching(&graph);
        if antimatching.len() as u64 >= k {
            return done(Verdict::Yes, log);
        }
        let partition = compute_classes(&graph, &antimatching)
            .expect("a maximum antimatching admits no improving swap");
        let (reduced, deleted) =
            rule2(&graph, &antimatching, &partition).expect("Rule 1 left a non-edge");
        if deleted.is_empty() {
            break;
        }
        graph = reduced;
        log.push(RuleApplication {
            rule: Rule::ClassTrim,
            deleted: deleted.iter().map(|&v| map[v]).collect(),
        });
        retain_unlisted(&mut map, &deleted);
    }

    KernelTrace {
        reduced: DualInstance { graph, k },
        log,
        vertex_map: map,
        shortcut: None,
    }
}

/// Drops positions listed in `deleted` (ascending) from `map`.
fn retain_unlisted(map: &mut Vec<Vertex>, deleted: &[Vertex]) {
    let mut idx = 0;
    let mut next = deleted.iter().peekable();
    map.retain(|_| {
        let drop = next.peek() == Some(&&idx);
        if drop {
            next.next();
        }
        idx += 1;
        !drop
    });
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Structural facts a maximum antimatching forces on the class partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub classes: usize,
    pub special_classes: usize,
    pub normal_classes: usize,
    pub special_non_edges: usize,
    pub normal_non_edges: usize,
    pub checks: Vec<ClaimCheck>,
}

impl ClaimReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn into_result(self) -> Result<Self> {
        match self.checks.iter().find(|c| !c.passed) {
            Some(c) => Err(Error::ClaimViolation {
                claim: c.name,
                detail: c.detail.clone(),
            }),
            None => Ok(self),
        }
    }
}

/// Recomputes every claim from the graph and the antimatching, without
/// trusting the tags stored in `partition`.
pub fn claim_report(g: &WeightedGraph, antimatching: &Antimatching, partition: &ClassPartition) -> ClaimReport {
    let covered = antimatching.vertex_set(g.n());
    let signatures: Vec<VertexSet> = partition
        .classes
        .iter()
        .map(|c| {
            let mut sig = g.neighbors(c.vertices[0]).clone();
            sig.intersect_with(&covered);
            sig
        })
        .collect();
    let raw = RawClasses {
        ground: partition.ground.clone(),
        members: partition.classes.iter().map(|c| c.vertices.clone()).collect(),
        signatures,
    };
    let claim1 = claim1_violation(antimatching, &raw);
    let claim3 = claim3_violation(antimatching, &raw);

    let special_classes = raw
        .signatures
        .iter()
        .filter(|s| antimatching.pairs().iter().any(|&e| endpoints_seen(s, e) == 0))
        .count();
    let special_non_edges = antimatching
        .pairs()
        .iter()
        .filter(|&&e| raw.signatures.iter().any(|s| endpoints_seen(s, e) == 0))
        .count();
    let normal_classes = raw.members.len() - special_classes;
    let normal_non_edges = antimatching.len() - special_non_edges;
    let normal_limit = 1u128
        .checked_shl(normal_non_edges as u32)
        .map_or(u128::MAX, |p| p - 1);

    let checks = vec![
        ClaimCheck {
            name: "class-sees-every-non-edge",
            passed: claim1.is_none(),
            detail: claim1.unwrap_or_default(),
        },
        ClaimCheck {
            name: "no-crossed-missing-endpoints",
            passed: claim3.is_none(),
            detail: claim3.unwrap_or_default(),
        },
        ClaimCheck {
            name: "special-classes-at-most-special-non-edges",
            passed: special_classes <= special_non_edges,
            detail: format!("{special_classes} special classes, {special_non_edges} special non-edges"),
        },
        ClaimCheck {
            name: "normal-classes-at-most-2^kn-1",
            passed: normal_classes as u128 <= normal_limit,
            detail: format!("{normal_classes} normal classes, limit {normal_limit}"),
        },
    ];
    ClaimReport {
        classes: raw.members.len(),
        special_classes,
        normal_classes,
        special_non_edges,
        normal_non_edges,
        checks,
    }
}

/// [`claim_report`], failing with [`Error::ClaimViolation`] on the first
/// violated claim.
pub fn audit_claims(g: &WeightedGraph, antimatching: &Antimatching, partition: &ClassPartition) -> Result<ClaimReport> {
    claim_report(g, antimatching, partition).into_result()
}
