//! End-to-end solvers and the [`Report`] they emit.
//!
//! Every solver verifies its answer against the strong-resolution predicate
//! before returning. A cover of the strong resolving graph that fails that
//! check is reported as [`Error::InternalVerificationFailure`], never as a
//! report.

use std::time::Instant;

use num_integer::Integer;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cover::{exact_min_cover, matching_cover_2approx, Budget};
use crate::error::{Error, Result};
use crate::graph::{apsp_with, serialize_graph, ApspMode, DistanceMatrix, Format, Graph, Node};
use crate::resolving::{
    brute_force_sdim, is_strong_resolving_set_with, strong_resolving_graph_with, DEFAULT_NODE_LIMIT,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Approx,
    Exact,
    Brute,
}

/// Phase timings in milliseconds, serialized as a JSON object in insertion
/// order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Timings(Vec<(String, f64)>);

impl Timings {
    fn record(&mut self, phase: &str, since: Instant) {
        let micros = since.elapsed().as_micros() as f64;
        self.0.push((phase.to_owned(), micros / 1e3));
    }

    pub fn phases(&self) -> impl Iterator<Item = (&str, f64)> {
        self.0.iter().map(|(p, ms)| (p.as_str(), *ms))
    }
}

impl Serialize for Timings {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (phase, ms) in &self.0 {
            map.serialize_entry(phase, ms)?;
        }
        map.end()
    }
}

/// Field order is part of the output format; `timings` stays last.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub input_digest: String,
    pub method: Method,
    pub solution: Vec<Node>,
    pub size: usize,
    pub lower_bound: usize,
    /// `size / lower_bound` as a reduced fraction `"p/q"`.
    pub ratio_bound: String,
    pub verified: bool,
    pub skipped_checks: Vec<String>,
    pub timings: Timings,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Copy with every timing zeroed, for comparisons.
    pub fn masked(&self) -> Report {
        let mut r = self.clone();
        for (_, ms) in &mut r.timings.0 {
            *ms = 0.0;
        }
        r
    }
}

/// `sha256:` followed by the hex digest of the canonical edge-list form.
pub fn input_digest(g: &Graph) -> String {
    let canonical = serialize_graph(g, Format::Edgelist);
    format!(
        "sha256:{}",
        hex::encode(Sha256::digest(canonical.as_bytes()))
    )
}

fn ratio_string(size: usize, lower_bound: usize) -> String {
    if lower_bound == 0 {
        return "1/1".to_owned();
    }
    let g = size.gcd(&lower_bound);
    format!("{}/{}", size / g, lower_bound / g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub apsp: ApspMode,
    /// Exact-cover budget; `None` is unbounded.
    pub budget: Option<Budget>,
    /// Node bound for the brute-force method.
    pub node_limit: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            apsp: ApspMode::Auto,
            budget: None,
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

fn verify(d: &DistanceMatrix, solution: &[Node], timings: &mut Timings) -> Result<()> {
    let t = Instant::now();
    let cert = is_strong_resolving_set_with(d, solution)?;
    timings.record("verify", t);
    match cert.witness_failure {
        None => Ok(()),
        Some((u, v)) => Err(Error::InternalVerificationFailure { u, v }),
    }
}

struct Prepared {
    digest: String,
    d: DistanceMatrix,
    timings: Timings,
}

fn prepare(g: &Graph, options: &SolveOptions) -> Result<Prepared> {
    let mut timings = Timings::default();
    let t = Instant::now();
    let d = apsp_with(g, options.apsp)?;
    timings.record("apsp", t);
    Ok(Prepared {
        digest: input_digest(g),
        d,
        timings,
    })
}

/// Matching-based 2-approximation on the strong resolving graph. The
/// matching size is a certified lower bound on the strong metric dimension.
pub fn approx_sdim(g: &Graph) -> Result<Report> {
    approx_sdim_with(g, &SolveOptions::default())
}

pub fn approx_sdim_with(g: &Graph, options: &SolveOptions) -> Result<Report> {
    let Prepared {
        digest,
        d,
        mut timings,
    } = prepare(g, options)?;
    let t = Instant::now();
    let srg = strong_resolving_graph_with(g, &d);
    timings.record("srg", t);
    let t = Instant::now();
    let cover = matching_cover_2approx(&srg.graph);
    timings.record("cover", t);
    verify(&d, &cover.nodes, &mut timings)?;
    Ok(Report {
        input_digest: digest,
        method: Method::Approx,
        size: cover.size(),
        lower_bound: cover.lower_bound,
        ratio_bound: ratio_string(cover.size(), cover.lower_bound),
        solution: cover.nodes,
        verified: true,
        skipped_checks: Vec::new(),
        timings,
    })
}

/// Optimal strong resolving set via an exact cover of the strong resolving
/// graph.
pub fn exact_sdim(g: &Graph, budget: Option<Budget>) -> Result<Report> {
    exact_sdim_with(
        g,
        &SolveOptions {
            budget,
            ..SolveOptions::default()
        },
    )
}

pub fn exact_sdim_with(g: &Graph, options: &SolveOptions) -> Result<Report> {
    let Prepared {
        digest,
        d,
        mut timings,
    } = prepare(g, options)?;
    let t = Instant::now();
    let srg = strong_resolving_graph_with(g, &d);
    timings.record("srg", t);
    let t = Instant::now();
    let cover = exact_min_cover(&srg.graph, options.budget)?;
    timings.record("cover", t);
    verify(&d, &cover.nodes, &mut timings)?;
    Ok(Report {
        input_digest: digest,
        method: Method::Exact,
        size: cover.size(),
        lower_bound: cover.size(),
        ratio_bound: ratio_string(cover.size(), cover.size()),
        solution: cover.nodes,
        verified: true,
        skipped_checks: Vec::new(),
        timings,
    })
}

/// Exhaustive search directly over strong resolution, without the strong
/// resolving graph.
pub fn brute_sdim_with(g: &Graph, options: &SolveOptions) -> Result<Report> {
    let Prepared {
        digest,
        d,
        mut timings,
    } = prepare(g, options)?;
    let t = Instant::now();
    let set = brute_force_sdim(g, options.node_limit)?;
    timings.record("search", t);
    verify(&d, &set.nodes, &mut timings)?;
    let size = set.len();
    Ok(Report {
        input_digest: digest,
        method: Method::Brute,
        solution: set.nodes,
        size,
        lower_bound: size,
        ratio_bound: ratio_string(size, size),
        verified: true,
        skipped_checks: Vec::new(),
        timings,
    })
}

pub fn solve(g: &Graph, method: Method, options: &SolveOptions) -> Result<Report> {
    match method {
        Method::Approx => approx_sdim_with(g, options),
        Method::Exact => exact_sdim_with(g, options),
        Method::Brute => brute_sdim_with(g, options),
    }
}
