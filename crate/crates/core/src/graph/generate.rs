//! Reproducible random test corpora.
//!
//! All sampling uses `ChaCha8Rng` seeded with `seed_from_u64`, which produces
//! the same stream on every platform and every run.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Node};
use crate::error::{Error, Result};

/// Resampling bound for [`gen_random_connected`].
pub const GENERATION_ATTEMPTS: usize = 1000;

/// Samples Erdős–Rényi `G(n, p)` until the sample is connected.
///
/// Pairs `(u, v)`, `u < v`, are visited in lexicographic order and each one
/// consumes exactly one Bernoulli draw, so `(n, p, seed)` fixes the result.
pub fn gen_random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "p = {p} is not a probability"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERATION_ATTEMPTS {
        let mut edges: Vec<(Node, Node)> = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_normalized(n, edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed {
        n,
        p,
        seed,
        attempts: GENERATION_ATTEMPTS,
    })
}

/// Grid of `(n, p, replicate)` cells used to build test corpora.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub nodes: RangeInclusive<usize>,
    pub probabilities: Vec<f64>,
    pub replicates: u64,
    pub base_seed: u64,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub graph: Graph,
}

/// One connected graph per grid cell, in `(n, p, replicate)` order. The seed
/// of each cell is derived from its coordinates so cells never share streams.
pub fn corpus(spec: &CorpusSpec) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for n in spec.nodes.clone() {
        for (pi, &p) in spec.probabilities.iter().enumerate() {
            for rep in 0..spec.replicates {
                let seed = spec
                    .base_seed
                    .wrapping_add((n as u64) << 32)
                    .wrapping_add((pi as u64) << 16)
                    .wrapping_add(rep);
                let graph = gen_random_connected(n, p, seed)?;
                out.push(CorpusEntry { n, p, seed, graph });
            }
        }
    }
    Ok(out)
}
