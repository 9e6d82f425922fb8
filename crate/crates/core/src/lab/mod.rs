//! Graph classes, bound audits and instance generators.

pub mod interval;
pub mod random;
pub mod setcover;
pub mod split;
pub mod tight;

pub use interval::{
    audit_interval_bounds, interval_report, intervals_to_graph, maximal_cliques_ordered, Interval,
    IntervalReport, IntervalRepresentation,
};
pub use setcover::{reduce_setcover, setcover_bruteforce, SetCoverInstance};
pub use split::{audit_split_bounds, split_partition, split_report, SplitProfile, SplitReport};
pub use tight::{gen_tight_general, gen_tight_interval};
