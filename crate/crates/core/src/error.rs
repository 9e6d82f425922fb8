use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {0}) is a self-loop")]
    MalformedEdge(Vertex),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} has invalid weight {weight} (weights must be integers >= 1)")]
    InvalidWeight { vertex: Vertex, weight: i128 },
    #[error("expected {expected} weights, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
    #[error("total vertex weight overflows a 64-bit accumulator")]
    WeightOverflow,
    #[error("vertex {0} is out of range")]
    InvalidVertex(Vertex),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid antimatching: {0}")]
    InvalidAntimatching(String),
    #[error("the parameter k must be at least 1")]
    InvalidParameter,
    #[error("instance too large: {size} exceeds the cap of {cap}")]
    InstanceTooLarge { size: usize, cap: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("antimatching is not maximum: {0}")]
    NonMaximalAntimatchingWitness(String),
    #[error("{claim} violated: {detail}")]
    ClaimViolation { claim: &'static str, detail: String },
    #[error("interval of vertex {vertex} has left endpoint {left} > right endpoint {right}")]
    InvalidInterval { vertex: Vertex, left: i64, right: i64 },
    #[error("budget {budget} exceeds the universe size {universe}; the instance is trivial")]
    TrivialBudget { budget: usize, universe: usize },
    #[error("malformed instance: {0}")]
    MalformedInstance(String),
}
