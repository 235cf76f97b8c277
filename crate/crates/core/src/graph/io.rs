//! Edge-list and DIMACS text formats.
//!
//! Edge list: `#` comment lines, a header `n m`, then `m` lines `u v` with
//! 0-based ids. DIMACS: `c` comment lines, a header `p edge n m`, then `m`
//! lines `e u v` with 1-based ids. Blank lines are ignored in both.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{Graph, Node};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Edgelist,
    Dimacs,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" => Ok(Format::Edgelist),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_int(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("invalid {what} `{token}`")))
}

struct Builder {
    n: usize,
    declared_m: usize,
    seen_m: usize,
    edges: Vec<(Node, Node)>,
}

impl Builder {
    fn new(n: usize, declared_m: usize) -> Self {
        Self {
            n,
            declared_m,
            seen_m: 0,
            edges: Vec::with_capacity(declared_m),
        }
    }

    fn push(&mut self, u: usize, v: usize, line: usize) -> Result<()> {
        if self.seen_m == self.declared_m {
            return Err(parse_error(
                line,
                format!("more edge lines than the {} declared", self.declared_m),
            ));
        }
        self.seen_m += 1;
        if u == v {
            return Err(Error::SelfLoop { line, node: u });
        }
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    fn finish(self, last_line: usize) -> Result<Graph> {
        if self.seen_m != self.declared_m {
            return Err(parse_error(
                last_line,
                format!(
                    "expected {} edge lines, found {}",
                    self.declared_m, self.seen_m
                ),
            ));
        }
        Ok(Graph::from_normalized(self.n, self.edges))
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut builder: Option<Builder> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(
                line,
                format!("expected two integers, found {} tokens", tokens.len()),
            ));
        }
        match builder.as_mut() {
            None => {
                let n = parse_int(tokens[0], line, "node count")?;
                let m = parse_int(tokens[1], line, "edge count")?;
                builder = Some(Builder::new(n, m));
            }
            Some(b) => {
                let u = parse_int(tokens[0], line, "node id")?;
                let v = parse_int(tokens[1], line, "node id")?;
                for node in [u, v] {
                    if node >= b.n {
                        return Err(parse_error(
                            line,
                            format!("node {node} out of range for n = {}", b.n),
                        ));
                    }
                }
                b.push(u, v, line)?;
            }
        }
    }
    builder
        .ok_or_else(|| parse_error(last_line.max(1), "missing `n m` header"))?
        .finish(last_line)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut builder: Option<Builder> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens[0] {
            "c" => continue,
            "p" => {
                if builder.is_some() {
                    return Err(parse_error(line, "duplicate `p` line"));
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(parse_error(line, "expected `p edge n m`"));
                }
                let n = parse_int(tokens[2], line, "node count")?;
                let m = parse_int(tokens[3], line, "edge count")?;
                builder = Some(Builder::new(n, m));
            }
            "e" => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| parse_error(line, "edge line before `p edge` header"))?;
                if tokens.len() != 3 {
                    return Err(parse_error(line, "expected `e u v`"));
                }
                let u = parse_int(tokens[1], line, "node id")?;
                let v = parse_int(tokens[2], line, "node id")?;
                for node in [u, v] {
                    if node == 0 || node > b.n {
                        return Err(parse_error(
                            line,
                            format!("node {node} out of range 1..={}", b.n),
                        ));
                    }
                }
                b.push(u - 1, v - 1, line)?;
            }
            other => {
                return Err(parse_error(line, format!("unknown line type `{other}`")));
            }
        }
    }
    builder
        .ok_or_else(|| parse_error(last_line.max(1), "missing `p edge n m` header"))?
        .finish(last_line)
}

/// Canonical text form: sorted edges with `u < v`, newline-terminated.
pub fn serialize_graph(g: &Graph, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Edgelist => {
            let _ = writeln!(out, "{} {}", g.node_count(), g.edge_count());
            for &(u, v) in g.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        Format::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", g.node_count(), g.edge_count());
            for &(u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_edgelist_path() {
        let g = parse_graph("3 2\n0 1\n1 2", Format::Edgelist).unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn parses_dimacs_triangle() {
        let g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3", Format::Dimacs).unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn self_loop_reports_line() {
        match parse_graph("2 1\n0 0", Format::Edgelist) {
            Err(Error::SelfLoop { line: 2, node: 0 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph("c hi\np edge 2 1\ne 2 2\n", Format::Dimacs) {
            Err(Error::SelfLoop { line: 3, node: 1 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn comments_and_duplicates() {
        let text = "# a comment\n3 3\n# mid\n0 1\n1 0\n\n2 1\n";
        let g = parse_graph(text, Format::Edgelist).unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            ("", Format::Edgelist, 1),
            ("3\n", Format::Edgelist, 1),
            ("3 1\n0 3\n", Format::Edgelist, 2),
            ("3 2\n0 1\n", Format::Edgelist, 2),
            ("3 1\n0 1\n1 2\n", Format::Edgelist, 3),
            ("3 1\n0 x\n", Format::Edgelist, 2),
            ("e 1 2\n", Format::Dimacs, 1),
            ("p edge 3 1\ne 0 1\n", Format::Dimacs, 2),
            ("p col 3 1\n", Format::Dimacs, 1),
            ("p edge 3 1\nx 1 2\n", Format::Dimacs, 2),
        ];
        for (text, format, expected_line) in cases {
            match parse_graph(text, format) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected_line, "{text:?}"),
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn canonical_serialization() {
        assert_eq!(
            serialize_graph(&Graph::path(3), Format::Edgelist),
            "3 2\n0 1\n1 2\n"
        );
        assert_eq!(serialize_graph(&Graph::empty(2), Format::Edgelist), "2 0\n");
        assert_eq!(
            serialize_graph(&Graph::complete(3), Format::Dimacs),
            "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
        );
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..12).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
                Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn serialize_then_parse_is_identity(g in arb_graph()) {
            for format in [Format::Edgelist, Format::Dimacs] {
                let text = serialize_graph(&g, format);
                let back = parse_graph(&text, format).unwrap();
                prop_assert_eq!(&back, &g);
                prop_assert_eq!(serialize_graph(&back, format), text);
            }
        }
    }
}
