//! Well-covered graphs and the `W_k` hierarchy.
//!
//! The crate is organised bottom-up: [`graph`] holds the dense bitset graph
//! type with graph6 I/O; [`independence`] the exact independent-set machinery;
//! [`classify`] the hierarchy predicates; [`constructions`] the corona, join
//! and concatenation operators; [`harness`] the executable theorem registry,
//! catalog surveys and the counterexample hunter.

pub mod catalog;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod independence;
pub mod vertex_set;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};
pub use graph::{Graph, Subgraph};
pub use vertex_set::VertexSet;
