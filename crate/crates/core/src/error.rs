use thiserror::Error;

use crate::cover::CoverSolution;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on node {node}")]
    SelfLoop { line: usize, node: usize },

    #[error("node {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("graph is disconnected (node {unreachable} is unreachable from node 0)")]
    DisconnectedGraph { unreachable: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph must have at least {required} nodes, got {n}")]
    TooFewNodes { n: usize, required: usize },

    #[error("pair endpoints must be distinct, got {{{node}, {node}}}")]
    DegeneratePair { node: usize },

    #[error("graph has {n} nodes, brute-force limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("no connected G({n}, {p}) sample after {attempts} attempts (seed {seed})")]
    GenerationFailed {
        n: usize,
        p: f64,
        seed: u64,
        attempts: usize,
    },

    #[error("search budget exceeded; best cover found has {} nodes", best.nodes.len())]
    BudgetExceeded { best: Box<CoverSolution> },

    #[error(
        "internal verification failure: pair {{{u}, {v}}} is not strongly resolved by the cover of the strong resolving graph"
    )]
    InternalVerificationFailure { u: usize, v: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
