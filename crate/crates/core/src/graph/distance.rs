use std::collections::VecDeque;

use rayon::prelude::*;

use super::{Graph, Node};
use crate::error::{Error, Result};

/// Hop distances between every pair of nodes of a connected graph, stored
/// row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Node, v: Node) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: Node) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn max(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ApspMode {
    Sequential,
    Parallel,
    /// Parallel above a size threshold, sequential below it.
    #[default]
    Auto,
}

const PARALLEL_THRESHOLD: usize = 256;

/// BFS from `source`; unreachable nodes keep `u32::MAX`.
fn bfs_row(g: &Graph, source: Node, row: &mut [u32]) {
    row.fill(u32::MAX);
    row[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &v in g.neighbors(u) {
            if row[v] == u32::MAX {
                row[v] = next;
                queue.push_back(v);
            }
        }
    }
}

pub fn apsp(g: &Graph) -> Result<DistanceMatrix> {
    apsp_with(g, ApspMode::Auto)
}

pub fn apsp_with(g: &Graph, mode: ApspMode) -> Result<DistanceMatrix> {
    g.require_connected()?;
    let n = g.node_count();
    let mut d = vec![0u32; n * n];
    let parallel = match mode {
        ApspMode::Sequential => false,
        ApspMode::Parallel => true,
        ApspMode::Auto => n >= PARALLEL_THRESHOLD,
    };
    if n > 0 {
        if parallel {
            d.par_chunks_mut(n)
                .enumerate()
                .for_each(|(source, row)| bfs_row(g, source, row));
        } else {
            for (source, row) in d.chunks_mut(n).enumerate() {
                bfs_row(g, source, row);
            }
        }
    }
    if let Some(pos) = d.iter().position(|&x| x == u32::MAX) {
        return Err(Error::DisconnectedGraph {
            unreachable: pos % n,
        });
    }
    Ok(DistanceMatrix { n, d })
}

/// Largest pairwise distance; 0 for graphs with fewer than two nodes.
pub fn diameter(d: &DistanceMatrix) -> u32 {
    d.max()
}
