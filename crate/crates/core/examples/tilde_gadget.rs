//! The tilde construction: sdim of the gadget equals the number of twin
//! nodes plus the minimum vertex cover of the source.

use strong_dim::cover::exact_min_cover;
use strong_dim::gadgets::{check_certificates, tilde_construction, CertificateOptions};
use strong_dim::graph::{apsp, diameter, serialize_graph, Format, Graph};
use strong_dim::resolving::brute_force_sdim;

fn main() -> strong_dim::Result<()> {
    let g = Graph::path(4);
    let out = tilde_construction(&g)?;
    print!("{}", serialize_graph(&out.graph, Format::Edgelist));
    println!("{}", serde_json::to_string_pretty(&out.sidecar()).unwrap());

    let kappa = out.params.kappa.unwrap_or(0);
    let mnc = exact_min_cover(&g, None)?.size();
    let sdim = brute_force_sdim(&out.graph, 20)?.len();
    let diam = diameter(&apsp(&out.graph)?);
    println!(
        "diameter {diam}, kappa {kappa} + MNC {mnc} = {}, sdim {sdim}",
        kappa + mnc
    );

    let cert = check_certificates(&out, &g, &CertificateOptions::default())?;
    for check in &cert.checks {
        println!("{:20} {:?}", check.name, check.status);
    }
    Ok(())
}
