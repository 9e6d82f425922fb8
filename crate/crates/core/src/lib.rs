//! Dual-parameterized weighted coloring: decide whether `sigma(G, w) <= w(V) - k`.
//!
//! [`solve_dual`] answers exactly, in time exponential only in `k`;
//! [`kernel::kernelize`] shrinks an instance to a size bounded by a function
//! of `k`; [`oracle`] holds the exhaustive references everything is tested
//! against, and [`lab`] the graph classes and instance generators.

pub mod error;
pub mod fpt;
pub mod graph;
pub mod kernel;
pub mod lab;
pub mod oracle;

pub use error::{Error, Result};
pub use fpt::{solve_dual, weighted_chromatic_number, DualAnswer, DualInstance, Verdict};
pub use graph::{Antimatching, Coloring, Vertex, VertexSet, Weight, WeightedGraph};

// The guide's code blocks run as doctests.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/weighted-coloring.md")]
    mod weighted_coloring {}
    #[doc = include_str!("../../../book/src/antimatchings.md")]
    mod antimatchings {}
    #[doc = include_str!("../../../book/src/fpt.md")]
    mod fpt {}
    #[doc = include_str!("../../../book/src/kernel.md")]
    mod kernel {}
    #[doc = include_str!("../../../book/src/graph-classes.md")]
    mod graph_classes {}
}
