//! Minimum node cover: validity checks, the maximal-matching 2-approximation,
//! and an exact branch-and-bound solver.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Node};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverSolution {
    /// Sorted ascending.
    pub nodes: Vec<Node>,
    /// Size of a matching in the source graph, or `nodes.len()` when exact.
    pub lower_bound: usize,
    pub exact: bool,
}

impl CoverSolution {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverCheck {
    pub valid: bool,
    /// First uncovered edge in sorted edge order.
    pub witness_edge: Option<(Node, Node)>,
}

pub fn is_vertex_cover(g: &Graph, s: &[Node]) -> Result<CoverCheck> {
    let mut member = vec![false; g.node_count()];
    for &x in s {
        g.check_node(x)?;
        member[x] = true;
    }
    let witness_edge = g
        .edges()
        .iter()
        .copied()
        .find(|&(u, v)| !member[u] && !member[v]);
    Ok(CoverCheck {
        valid: witness_edge.is_none(),
        witness_edge,
    })
}

/// Greedy maximal matching over edges in lexicographic `(u, v)` order,
/// restricted to nodes flagged in `alive`.
fn greedy_matching(g: &Graph, alive: &[bool]) -> Vec<(Node, Node)> {
    let mut matched = vec![false; g.node_count()];
    let mut matching = Vec::new();
    for &(u, v) in g.edges() {
        if alive[u] && alive[v] && !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            matching.push((u, v));
        }
    }
    matching
}

pub fn matching_lower_bound(g: &Graph) -> usize {
    greedy_matching(g, &vec![true; g.node_count()]).len()
}

/// Both endpoints of every edge of the greedy maximal matching.
pub fn matching_cover_2approx(g: &Graph) -> CoverSolution {
    let matching = greedy_matching(g, &vec![true; g.node_count()]);
    let mut nodes: Vec<Node> = matching.iter().flat_map(|&(u, v)| [u, v]).collect();
    nodes.sort_unstable();
    CoverSolution {
        lower_bound: matching.len(),
        exact: matching.is_empty(),
        nodes,
    }
}

/// Limits for [`exact_min_cover`]. Either bound may be left unset.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_branches: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn branches(max: u64) -> Self {
        Self {
            max_branches: Some(max),
            time_limit: None,
        }
    }

    pub fn millis(ms: u64) -> Self {
        Self {
            max_branches: None,
            time_limit: Some(Duration::from_millis(ms)),
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<Node>,
    branches: u64,
    budget: Budget,
    started: Instant,
    exceeded: bool,
}

impl Search<'_> {
    fn alive_degree(&self, alive: &[bool], v: Node) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| alive[w]).count()
    }

    fn over_budget(&self) -> bool {
        self.budget
            .max_branches
            .is_some_and(|max| self.branches > max)
            || self
                .budget
                .time_limit
                .is_some_and(|limit| self.started.elapsed() > limit)
    }

    /// Degree-0 nodes are dropped; a degree-1 node forces its neighbor into
    /// the cover. Nodes are scanned in ascending id until nothing changes.
    fn reduce(&self, alive: &mut [bool], chosen: &mut Vec<Node>) {
        loop {
            let mut changed = false;
            for v in self.g.nodes() {
                if !alive[v] {
                    continue;
                }
                let mut live = self.g.neighbors(v).iter().copied().filter(|&w| alive[w]);
                match (live.next(), live.next()) {
                    (None, _) => {
                        alive[v] = false;
                        changed = true;
                    }
                    (Some(w), None) => {
                        chosen.push(w);
                        alive[w] = false;
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn branch(&mut self, mut alive: Vec<bool>, mut chosen: Vec<Node>) {
        if self.exceeded {
            return;
        }
        self.branches += 1;
        if self.over_budget() {
            self.exceeded = true;
            return;
        }
        self.reduce(&mut alive, &mut chosen);
        if chosen.len() >= self.best.len() {
            return;
        }
        // After reduction every live node has live degree >= 2.
        if !alive.iter().any(|&a| a) {
            self.best = chosen;
            return;
        }
        let bound = greedy_matching(self.g, &alive).len();
        if chosen.len() + bound >= self.best.len() {
            return;
        }
        let mut pivot = None;
        let mut pivot_degree = 0;
        for v in self.g.nodes().filter(|&v| alive[v]) {
            let deg = self.alive_degree(&alive, v);
            if deg > pivot_degree {
                pivot = Some(v);
                pivot_degree = deg;
            }
        }
        let v = pivot.expect("live nodes remain");

        let mut with_v = alive.clone();
        with_v[v] = false;
        let mut chosen_v = chosen.clone();
        chosen_v.push(v);
        self.branch(with_v, chosen_v);

        for &w in self.g.neighbors(v) {
            if alive[w] {
                alive[w] = false;
                chosen.push(w);
            }
        }
        alive[v] = false;
        self.branch(alive, chosen);
    }
}

/// Optimal node cover by branch and bound. On budget exhaustion the best
/// cover found so far is returned inside [`Error::BudgetExceeded`], flagged
/// inexact.
pub fn exact_min_cover(g: &Graph, budget: Option<Budget>) -> Result<CoverSolution> {
    let start = matching_cover_2approx(g);
    let mut search = Search {
        g,
        best: start.nodes.clone(),
        branches: 0,
        budget: budget.unwrap_or_default(),
        started: Instant::now(),
        exceeded: false,
    };
    search.branch(vec![true; g.node_count()], Vec::new());
    let mut nodes = search.best;
    nodes.sort_unstable();
    if search.exceeded {
        return Err(Error::BudgetExceeded {
            best: Box::new(CoverSolution {
                nodes,
                lower_bound: start.lower_bound,
                exact: false,
            }),
        });
    }
    Ok(CoverSolution {
        lower_bound: nodes.len(),
        nodes,
        exact: true,
    })
}
