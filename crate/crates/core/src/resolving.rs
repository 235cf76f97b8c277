//! Strong resolution: the pair predicates, the strong resolving graph, and an
//! exhaustive minimum search used as ground truth.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{apsp, DistanceMatrix, Graph, Node};

/// Default node bound for [`brute_force_sdim`].
pub const DEFAULT_NODE_LIMIT: usize = 20;

/// Hard bound imposed by the 64-bit subset encoding.
pub const MAX_NODE_LIMIT: usize = 64;

/// Graph on the nodes of a source graph whose edges are its mutually
/// maximally distant pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongResolvingGraph {
    pub base_n: usize,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionCertificate {
    pub valid: bool,
    /// Lexicographically first pair no member of the set strongly resolves.
    pub witness_failure: Option<(Node, Node)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetRole {
    StrongResolvingSet,
    VertexCover,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeSet {
    pub role: SetRole,
    pub nodes: Vec<Node>,
}

impl NodeSet {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

fn distinct(u: Node, v: Node) -> Result<()> {
    if u == v {
        Err(Error::DegeneratePair { node: u })
    } else {
        Ok(())
    }
}

fn check_in(d: &DistanceMatrix, nodes: &[Node]) -> Result<()> {
    let n = d.node_count();
    match nodes.iter().find(|&&x| x >= n) {
        Some(&node) => Err(Error::NodeOutOfRange { node, n }),
        None => Ok(()),
    }
}

#[inline]
fn mmd_unchecked(d: &DistanceMatrix, g: &Graph, u: Node, v: Node) -> bool {
    let duv = d.get(u, v);
    g.neighbors(u).iter().all(|&x| d.get(x, v) <= duv)
        && g.neighbors(v).iter().all(|&y| d.get(y, u) <= duv)
}

/// Whether a shortest `u`-`v` path is maximal: no neighbor of either endpoint
/// lies farther from the other endpoint.
pub fn is_mmd_pair(d: &DistanceMatrix, g: &Graph, u: Node, v: Node) -> Result<bool> {
    distinct(u, v)?;
    check_in(d, &[u, v])?;
    Ok(mmd_unchecked(d, g, u, v))
}

#[inline]
fn resolves_unchecked(d: &DistanceMatrix, x: Node, u: Node, v: Node) -> bool {
    let duv = d.get(u, v);
    d.get(x, u) == d.get(x, v) + duv || d.get(x, v) == d.get(x, u) + duv
}

/// Whether `u` lies on a shortest `x`-`v` path or `v` on a shortest `x`-`u`
/// path. Always true for `x` in `{u, v}`.
pub fn strongly_resolves(d: &DistanceMatrix, x: Node, u: Node, v: Node) -> Result<bool> {
    distinct(u, v)?;
    check_in(d, &[x, u, v])?;
    Ok(resolves_unchecked(d, x, u, v))
}

pub fn strong_resolving_graph(g: &Graph) -> Result<StrongResolvingGraph> {
    let d = apsp(g)?;
    Ok(strong_resolving_graph_with(g, &d))
}

/// `d` must be the distance matrix of `g`.
pub fn strong_resolving_graph_with(g: &Graph, d: &DistanceMatrix) -> StrongResolvingGraph {
    let n = g.node_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mmd_unchecked(d, g, u, v) {
                edges.push((u, v));
            }
        }
    }
    StrongResolvingGraph {
        base_n: n,
        graph: Graph::from_normalized(n, edges),
    }
}

pub fn is_strong_resolving_set(g: &Graph, s: &[Node]) -> Result<ResolutionCertificate> {
    g.require_connected()?;
    for &x in s {
        g.check_node(x)?;
    }
    let d = apsp(g)?;
    is_strong_resolving_set_with(&d, s)
}

/// Same as [`is_strong_resolving_set`] over a precomputed distance matrix.
pub fn is_strong_resolving_set_with(
    d: &DistanceMatrix,
    s: &[Node],
) -> Result<ResolutionCertificate> {
    check_in(d, s)?;
    let n = d.node_count();
    for u in 0..n {
        for v in u + 1..n {
            if !s.iter().any(|&x| resolves_unchecked(d, x, u, v)) {
                return Ok(ResolutionCertificate {
                    valid: false,
                    witness_failure: Some((u, v)),
                });
            }
        }
    }
    Ok(ResolutionCertificate {
        valid: true,
        witness_failure: None,
    })
}

/// Bitmask of every node that strongly resolves each pair, reduced to the
/// inclusion-minimal masks (a subset hitting those hits all of them).
fn minimal_resolver_masks(d: &DistanceMatrix) -> Vec<u64> {
    let n = d.node_count();
    let mut masks = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let mask = (0..n)
                .filter(|&x| resolves_unchecked(d, x, u, v))
                .fold(0u64, |acc, x| acc | (1 << x));
            masks.push(mask);
        }
    }
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for m in masks {
        if !minimal.iter().any(|&kept| kept & !m == 0) {
            minimal.push(m);
        }
    }
    minimal
}

/// Exhaustive search for a subset of size at most `budget`, containing
/// `chosen` and avoiding `forbidden`, that hits every mask. Branches over the
/// members of the first unhit mask; members already tried at this level are
/// forbidden in later siblings so no subset is visited twice.
fn hitting_set_exists(masks: &[u64], chosen: u64, forbidden: u64, budget: u32) -> bool {
    let Some(pos) = masks.iter().position(|&m| m & chosen == 0) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    // Pairwise-disjoint unhit masks each need their own member.
    let mut packed = 0u64;
    let mut disjoint = 0u32;
    for &m in &masks[pos..] {
        if m & chosen == 0 && m & packed == 0 {
            packed |= m;
            disjoint += 1;
            if disjoint > budget {
                return false;
            }
        }
    }
    let mut candidates = masks[pos] & !forbidden;
    let mut tried = 0u64;
    while candidates != 0 {
        let bit = candidates & candidates.wrapping_neg();
        candidates ^= bit;
        if hitting_set_exists(&masks[pos..], chosen | bit, forbidden | tried, budget - 1) {
            return true;
        }
        tried |= bit;
    }
    false
}

/// Minimum strongly resolving set by exhaustive search over node subsets.
///
/// Sizes are tried in increasing order; the first feasible size is the
/// minimum. Among minimum sets the one with the smallest bitmask value is
/// returned, found by excluding nodes from the highest id downward whenever
/// a minimum set without them still exists.
pub fn brute_force_sdim(g: &Graph, node_limit: usize) -> Result<NodeSet> {
    if node_limit > MAX_NODE_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "node limit {node_limit} exceeds the maximum of {MAX_NODE_LIMIT}"
        )));
    }
    let n = g.node_count();
    if n > node_limit {
        return Err(Error::TooLarge {
            n,
            limit: node_limit,
        });
    }
    let d = apsp(g)?;
    let masks = minimal_resolver_masks(&d);
    let size = (0..=n as u32)
        .find(|&k| hitting_set_exists(&masks, 0, 0, k))
        .expect("the full node set strongly resolves every pair");

    let mut chosen = 0u64;
    let mut forbidden = 0u64;
    for x in (0..n).rev() {
        let bit = 1u64 << x;
        let remaining = size - chosen.count_ones();
        if hitting_set_exists(&masks, chosen, forbidden | bit, remaining) {
            forbidden |= bit;
        } else {
            chosen |= bit;
        }
    }
    debug_assert_eq!(chosen.count_ones(), size);
    Ok(NodeSet {
        role: SetRole::StrongResolvingSet,
        nodes: (0..n).filter(|&x| chosen >> x & 1 == 1).collect(),
    })
}
