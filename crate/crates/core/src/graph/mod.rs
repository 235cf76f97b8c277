//! Simple undirected graphs on dense node identifiers `0..n`.
//!
//! A [`Graph`] is immutable once built: every constructor normalizes its edge
//! set (deduplicated, `u < v`, sorted) and derives sorted adjacency lists, so
//! all downstream iteration is deterministic.

mod distance;
mod generate;
mod io;
mod twins;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

pub use distance::{apsp, apsp_with, diameter, ApspMode, DistanceMatrix};
pub use generate::{corpus, gen_random_connected, CorpusEntry, CorpusSpec, GENERATION_ATTEMPTS};
pub use io::{parse_graph, serialize_graph, Format};
pub use twins::{find_twins, TwinReport};

/// Node identifier.
pub type Node = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Node, Node)>,
    adjacency: Vec<Vec<Node>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Node, Node)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for node in [u, v] {
                if node >= n {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line: 0, node: u });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_normalized(n, normalized))
    }

    /// `normalized` must already satisfy `u < v < n` for every pair.
    pub(crate) fn from_normalized(n: usize, mut edges: Vec<(Node, Node)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            n,
            edges,
            adjacency,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_normalized(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::from_normalized(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// Cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 nodes");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::from_normalized(n, edges)
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_normalized(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> &[(Node, Node)] {
        &self.edges
    }

    pub fn nodes(&self) -> std::ops::Range<Node> {
        0..self.n
    }

    /// Sorted open neighborhood of `u`.
    pub fn neighbors(&self, u: Node) -> &[Node] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: Node) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, u: Node, v: Node) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub(crate) fn check_node(&self, node: Node) -> Result<()> {
        if node < self.n {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node, n: self.n })
        }
    }

    /// First node not reachable from node 0, if any.
    pub fn first_unreachable(&self) -> Option<Node> {
        if self.n == 0 {
            return None;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        match self.first_unreachable() {
            None => Ok(()),
            Some(unreachable) => Err(Error::DisconnectedGraph { unreachable }),
        }
    }

    /// An edge whose endpoints receive the same color in a BFS 2-coloring
    /// (so it closes an odd cycle), or `None` when the graph is bipartite.
    pub fn odd_cycle_edge(&self) -> Option<(Node, Node)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("queued nodes are colored");
                for &v in &self.adjacency[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return Some((u.min(v), u.max(v))),
                        Some(_) => {}
                    }
                }
            }
        }
        None
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_cycle_edge().is_none()
    }

    /// Graph on the same nodes whose edges are exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let mut edges =
            Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.edges.len());
        for u in 0..self.n {
            let nbrs = &self.adjacency[u];
            edges.extend(
                (u + 1..self.n)
                    .filter(|v| nbrs.binary_search(v).is_err())
                    .map(|v| (u, v)),
            );
        }
        Self::from_normalized(self.n, edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphProperties {
    pub connected: bool,
    pub bipartite: bool,
    pub n: usize,
    pub m: usize,
}

pub fn graph_properties(g: &Graph) -> GraphProperties {
    GraphProperties {
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        n: g.node_count(),
        m: g.edge_count(),
    }
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}
