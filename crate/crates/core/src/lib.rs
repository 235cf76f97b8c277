//! Strong metric dimension of graphs.
//!
//! The strong metric dimension of a connected graph equals the minimum vertex
//! cover of its strong resolving graph (see [`resolving`]), which is what the
//! solvers in [`pipeline`] compute. [`gadgets`] holds the constructions used
//! to transfer vertex cover hardness to restricted graph classes, each with a
//! checker that verifies its claimed properties on concrete inputs.

pub mod cli;
pub mod cover;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod pipeline;
pub mod resolving;

pub use error::{Error, Result};
