//! Builds the strong resolving graph of a cycle and checks candidate sets
//! against the strong resolution predicate.

use strong_dim::graph::{apsp, Graph};
use strong_dim::resolving::{
    is_mmd_pair, is_strong_resolving_set, strong_resolving_graph, strongly_resolves,
};

fn main() -> strong_dim::Result<()> {
    let g = Graph::cycle(6);
    let d = apsp(&g)?;

    println!(
        "d(0, 3) = {}, MMD: {}",
        d.get(0, 3),
        is_mmd_pair(&d, &g, 0, 3)?
    );
    println!(
        "d(0, 2) = {}, MMD: {}",
        d.get(0, 2),
        is_mmd_pair(&d, &g, 0, 2)?
    );
    println!(
        "4 strongly resolves {{0, 3}}: {}",
        strongly_resolves(&d, 4, 0, 3)?
    );

    let srg = strong_resolving_graph(&g)?;
    println!("strong resolving graph edges: {:?}", srg.graph.edges());

    for set in [vec![0, 1, 2], vec![0, 1]] {
        let cert = is_strong_resolving_set(&g, &set)?;
        match cert.witness_failure {
            None => println!("{set:?} resolves every pair"),
            Some((u, v)) => println!("{set:?} fails on pair {{{u}, {v}}}"),
        }
    }
    Ok(())
}
