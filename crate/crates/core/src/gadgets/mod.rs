//! Hardness gadgets and their certificate checkers.
//!
//! Three constructions are provided, each returning a [`GadgetOutput`] whose
//! node ids follow a fixed layout: the source nodes keep their ids `0..n`,
//! construction-specific nodes are appended after them, and the universal
//! node `y` (when present) is always last.
//!
//! * [`tilde_construction`]: complement of `G`, one pendant `x_j` per false
//!   twin `u_j`, and a universal node `y`. The result has diameter 2 and
//!   strong metric dimension `kappa + MNC(G)`.
//! * [`plus_construction`]: binary label nodes `v_0..v_{k-1}` plus `y`, with
//!   `k = 1 + floor(log2 n)`. Node `j - 1` is joined to `v_l` whenever bit
//!   `l` of `j` is set, which leaves no two nodes with equal neighborhoods.
//!   `v_0` is included; without it `j = 2` and `j = 3` would receive the
//!   same label edges.
//! * [`subdivide_edges`]: every edge `{u, v}` becomes a path `u - x_uv - v`.
//!
//! [`hardness_pipeline`] chains `G -> G+ -> tilde(G+) -> subdivision`.

mod certificate;
mod construct;

use serde::Serialize;

use crate::graph::{Graph, Node};

pub use certificate::{
    check_certificates, CertificateOptions, Check, CheckStatus, GadgetCertificate, Witness,
};
pub use construct::{
    hardness_pipeline, label_bit_count, plus_construction, subdivide_edges, tilde_construction,
    HardnessPipeline,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum GadgetKind {
    Tilde,
    Plus,
    Subdivision,
}

/// Where a node of a gadget output came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum NodeRole {
    /// Node `index` of the source graph.
    Original {
        index: Node,
    },
    /// Label node for bit `bit`.
    VLabel {
        bit: usize,
    },
    /// Pendant `x_j` (1-based `j`) attached to twin node `attached_to`.
    XAttach {
        j: usize,
        attached_to: Node,
    },
    YUniversal,
    /// Midpoint of source edge `{u, v}`.
    Subdivision {
        u: Node,
        v: Node,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct GadgetParams {
    /// Number of false-twin nodes (tilde).
    pub kappa: Option<usize>,
    /// Number of label bits (plus).
    pub k: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetOutput {
    pub kind: GadgetKind,
    pub graph: Graph,
    pub provenance: Vec<NodeRole>,
    pub params: GadgetParams,
}

impl GadgetOutput {
    pub fn nodes_with<F>(&self, pred: F) -> Vec<Node>
    where
        F: Fn(&NodeRole) -> bool,
    {
        self.provenance
            .iter()
            .enumerate()
            .filter(|(_, role)| pred(role))
            .map(|(id, _)| id)
            .collect()
    }

    pub fn universal_node(&self) -> Option<Node> {
        self.provenance
            .iter()
            .position(|r| matches!(r, NodeRole::YUniversal))
    }

    /// JSON record of kind, parameters and per-node provenance.
    pub fn sidecar(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind,
            "n": self.graph.node_count(),
            "m": self.graph.edge_count(),
            "params": self.params,
            "provenance": self.provenance,
        })
    }
}
