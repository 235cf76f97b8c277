//! Matching 2-approximation against the exact branch-and-bound cover, and
//! what happens when the exact search runs out of budget.

use strong_dim::cover::{exact_min_cover, matching_cover_2approx, Budget};
use strong_dim::graph::{gen_random_connected, Graph};
use strong_dim::Error;

fn main() -> strong_dim::Result<()> {
    for seed in 0..5 {
        let g = gen_random_connected(14, 0.3, seed)?;
        let approx = matching_cover_2approx(&g);
        let exact = exact_min_cover(&g, None)?;
        println!(
            "seed {seed}: m = {:2}, matching bound {}, approx {}, optimum {}",
            g.edge_count(),
            approx.lower_bound,
            approx.size(),
            exact.size()
        );
    }

    match exact_min_cover(&Graph::complete(16), Some(Budget::branches(10))) {
        Err(Error::BudgetExceeded { best }) => println!(
            "K_16 with 10 branches: best {} (exact: {}), lower bound {}",
            best.size(),
            best.exact,
            best.lower_bound
        ),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
