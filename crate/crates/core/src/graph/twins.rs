use std::collections::HashMap;

use serde::Serialize;

use super::{Graph, Node};

/// Partition of the nodes by open neighborhood (false-twin classes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinReport {
    /// Every class, including singletons, ordered by smallest member.
    pub classes: Vec<Vec<Node>>,
    /// Nodes whose class has at least two members, ascending.
    pub twin_nodes: Vec<Node>,
    pub kappa: usize,
    /// `(u_i, v_i)` for each twin node: the smallest other member of its class.
    pub partners: Vec<(Node, Node)>,
}

pub fn find_twins(g: &Graph) -> TwinReport {
    let mut class_of: HashMap<&[Node], usize> = HashMap::new();
    let mut classes: Vec<Vec<Node>> = Vec::new();
    for u in g.nodes() {
        let id = *class_of.entry(g.neighbors(u)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(u);
    }
    // Nodes are visited in ascending order, so classes are created in order of
    // their smallest member and each class is sorted.
    let mut twin_nodes = Vec::new();
    let mut partners = Vec::new();
    let mut owner = vec![0usize; g.node_count()];
    for (id, class) in classes.iter().enumerate() {
        for &u in class {
            owner[u] = id;
        }
    }
    for u in g.nodes() {
        let class = &classes[owner[u]];
        if class.len() >= 2 {
            twin_nodes.push(u);
            let partner = if class[0] == u { class[1] } else { class[0] };
            partners.push((u, partner));
        }
    }
    TwinReport {
        kappa: twin_nodes.len(),
        classes,
        twin_nodes,
        partners,
    }
}
