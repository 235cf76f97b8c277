//! Runs G -> G+ -> tilde(G+) -> subdivision on a path and prints every
//! certificate along the way.

use strong_dim::gadgets::{hardness_pipeline, CertificateOptions, CheckStatus};
use strong_dim::graph::Graph;

fn main() -> strong_dim::Result<()> {
    let g = Graph::path(3);
    let options = CertificateOptions {
        oracle_limit: 64,
        cover_budget: None,
    };
    let p = hardness_pipeline(&g, &options)?;
    for (stage, out) in [
        ("plus", &p.plus),
        ("tilde(plus)", &p.tilde_of_plus),
        ("subdivided", &p.subdivided),
    ] {
        println!(
            "{stage:12} n = {:3} m = {:3}",
            out.graph.node_count(),
            out.graph.edge_count()
        );
    }
    for check in p.certificates.all() {
        let verdict = match &check.status {
            CheckStatus::Passed => "PASS".to_owned(),
            CheckStatus::Failed { witness } => format!("FAIL ({witness})"),
            CheckStatus::Skipped { reason } => format!("SKIP ({reason})"),
        };
        println!("{:45} {verdict}", check.name);
    }
    Ok(())
}
