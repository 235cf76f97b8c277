//! Approximate, exact and brute-force strong metric dimension on small
//! named graphs.

use strong_dim::graph::Graph;
use strong_dim::pipeline::{solve, Method, SolveOptions};

fn main() -> strong_dim::Result<()> {
    let graphs = [
        ("P_3", Graph::path(3)),
        ("C_4", Graph::cycle(4)),
        ("K_4", Graph::complete(4)),
        ("K_1,3", Graph::star(3)),
    ];
    let opts = SolveOptions::default();
    for (name, g) in &graphs {
        for method in [Method::Approx, Method::Exact, Method::Brute] {
            let r = solve(g, method, &opts)?;
            println!(
                "{name:6} {method:?}: size {} lower bound {} ratio {} solution {:?}",
                r.size, r.lower_bound, r.ratio_bound, r.solution
            );
        }
    }

    let r = solve(&Graph::cycle(5), Method::Exact, &opts)?;
    println!("\n{}", r.to_json());
    Ok(())
}
