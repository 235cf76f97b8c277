//! Subdividing a triangle gives C_6, whose strong metric dimension is 3
//! rather than 2. The checker reports the offending pair.

use strong_dim::gadgets::{check_certificates, subdivide_edges, CertificateOptions, CheckStatus};
use strong_dim::graph::Graph;
use strong_dim::resolving::brute_force_sdim;

fn main() -> strong_dim::Result<()> {
    let k3 = Graph::complete(3);
    let c6 = subdivide_edges(&k3);
    println!("edges: {:?}", c6.graph.edges());
    println!(
        "sdim(K_3) = {}, sdim(C_6) = {}",
        brute_force_sdim(&k3, 20)?.len(),
        brute_force_sdim(&c6.graph, 20)?.len()
    );

    let cert = check_certificates(&c6, &k3, &CertificateOptions::default())?;
    for check in &cert.checks {
        match &check.status {
            CheckStatus::Failed { witness } => println!("FAIL {}: {witness}", check.name),
            status => println!("{:?} {}", status, check.name),
        }
    }
    Ok(())
}
