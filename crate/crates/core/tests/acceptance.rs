//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p strong-dim --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use strong_dim::cover::exact_min_cover;
use strong_dim::gadgets::{
    hardness_pipeline, label_bit_count, plus_construction, subdivide_edges, tilde_construction,
    CertificateOptions, CheckStatus,
};
use strong_dim::graph::{
    apsp, corpus, diameter, find_twins, ApspMode, CorpusEntry, CorpusSpec, Graph,
};
use strong_dim::pipeline::{approx_sdim, solve, Method, SolveOptions};
use strong_dim::resolving::{brute_force_sdim, is_strong_resolving_set, strong_resolving_graph};

const PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.8];

fn graphs(
    nodes: std::ops::RangeInclusive<usize>,
    replicates: u64,
    base_seed: u64,
) -> Vec<CorpusEntry> {
    corpus(&CorpusSpec {
        nodes,
        probabilities: PROBABILITIES.to_vec(),
        replicates,
        base_seed,
    })
    .expect("corpus generation")
}

fn report(id: u32, title: &str, failures: &[String], detail: &str) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("{verdict} AC{id} {title}: {detail}");
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(
        failures.is_empty(),
        "AC{id} failed with {} violation(s)",
        failures.len()
    );
}

fn sdim(g: &Graph) -> usize {
    brute_force_sdim(g, 64).expect("oracle").len()
}

fn mnc(g: &Graph) -> usize {
    exact_min_cover(g, None).expect("unbounded cover").size()
}

fn label(e: &CorpusEntry) -> String {
    format!("n={} p={} seed={}", e.n, e.p, e.seed)
}

#[test]
fn ac1_oracle_equivalence() {
    let start = Instant::now();
    let entries = graphs(2..=10, 8, 0x5D1A);
    let mut failures = Vec::new();
    for e in &entries {
        let brute = sdim(&e.graph);
        let srg = strong_resolving_graph(&e.graph).unwrap();
        let cover = mnc(&srg.graph);
        if brute != cover {
            failures.push(format!("{}: brute {brute} != cover {cover}", label(e)));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("runtime {elapsed:?} exceeds 60 s"));
    }
    report(
        1,
        "brute-force sdim equals exact cover of the strong resolving graph",
        &failures,
        &format!(
            "{} graphs, {} mismatches, {:.2?}",
            entries.len(),
            failures.len(),
            elapsed
        ),
    );
}

#[test]
fn ac2_approximation_ratio() {
    let entries = graphs(2..=10, 8, 0x5D1A);
    let mut failures = Vec::new();
    for e in &entries {
        let r = approx_sdim(&e.graph).unwrap();
        let exact = sdim(&e.graph);
        let valid = is_strong_resolving_set(&e.graph, &r.solution)
            .unwrap()
            .valid;
        if !r.verified || !valid || r.size > 2 * exact || r.lower_bound > exact {
            failures.push(format!(
                "{}: size {} lb {} sdim {exact} verified {} valid {valid}",
                label(e),
                r.size,
                r.lower_bound,
                r.verified
            ));
        }
    }
    for (name, g) in [("P_3", Graph::path(3)), ("K_2", Graph::complete(2))] {
        let r = approx_sdim(&g).unwrap();
        let exact = sdim(&g);
        if r.size != 2 * exact {
            failures.push(format!(
                "{name}: approx {} sdim {exact}, ratio not 2",
                r.size
            ));
        }
    }
    report(
        2,
        "matching approximation within factor 2, tight on P_3 and K_2",
        &failures,
        &format!("{} graphs + 2 tight cases", entries.len()),
    );
}

#[test]
fn ac3_tilde_identity() {
    let entries = graphs(2..=6, 4, 0x71D3);
    let mut failures = Vec::new();
    for e in &entries {
        let out = tilde_construction(&e.graph).unwrap();
        let diam = diameter(&apsp(&out.graph).unwrap());
        let kappa = out.params.kappa.unwrap();
        let expected = kappa + mnc(&e.graph);
        let actual = sdim(&out.graph);
        if diam != 2 || actual != expected {
            failures.push(format!(
                "{}: diam {diam}, sdim {actual}, kappa + mnc {expected}",
                label(e)
            ));
        }
    }
    report(
        3,
        "tilde construction has diameter 2 and sdim = kappa + MNC",
        &failures,
        &format!("{} graphs", entries.len()),
    );
}

#[test]
fn ac4_plus_certificates() {
    let entries = graphs(2..=16, 3, 0x9105);
    let bullets = [
        "distinct_original_original",
        "distinct_label_label",
        "distinct_original_label",
        "distinct_label_universal",
        "distinct_original_universal",
    ];
    let options = CertificateOptions::default();
    let mut failures = Vec::new();
    for e in &entries {
        let out = plus_construction(&e.graph).unwrap();
        let kappa = find_twins(&out.graph).kappa;
        if kappa != 0 {
            failures.push(format!("{}: kappa(G+) = {kappa}", label(e)));
        }
        let cert = strong_dim::gadgets::check_certificates(&out, &e.graph, &options).unwrap();
        for b in bullets {
            match cert.get(b).map(|c| &c.status) {
                Some(CheckStatus::Passed) => {}
                other => failures.push(format!("{}: {b} {other:?}", label(e))),
            }
        }
        let base = mnc(&e.graph);
        let plus = mnc(&out.graph);
        let slack = label_bit_count(e.n) + 1;
        if plus < base || plus > base + slack {
            failures.push(format!("{}: MNC(G) {base}, MNC(G+) {plus}", label(e)));
        }
    }
    report(
        4,
        "plus construction is twin-free and MNC stays within floor(log2 n) + 2",
        &failures,
        &format!("{} graphs", entries.len()),
    );
}

#[test]
fn ac5_subdivision_pipeline() {
    let entries = graphs(2..=4, 3, 0x5B0D);
    let options = CertificateOptions {
        oracle_limit: 64,
        cover_budget: None,
    };
    let mut failures = Vec::new();
    for e in &entries {
        let p = hardness_pipeline(&e.graph, &options).unwrap();
        let sub = &p.subdivided.graph;
        let d = diameter(&apsp(sub).unwrap());
        if !sub.is_bipartite() || d > 4 {
            failures.push(format!(
                "{}: bipartite {} diameter {d}",
                label(e),
                sub.is_bipartite()
            ));
        }
        let check = p
            .certificates
            .subdivided
            .get("no_maximal_path_at_subdivision");
        if !check.is_some_and(|c| c.is_passed()) {
            failures.push(format!(
                "{}: no_maximal_path_at_subdivision {check:?}",
                label(e)
            ));
        }
        let lhs = sdim(sub);
        let rhs = sdim(&p.tilde_of_plus.graph);
        if lhs != rhs {
            failures.push(format!(
                "{}: sdim(subdivided) {lhs} != sdim(tilde(G+)) {rhs}",
                label(e)
            ));
        }
    }

    let c6 = subdivide_edges(&Graph::complete(3));
    let cert = strong_dim::gadgets::check_certificates(&c6, &Graph::complete(3), &options).unwrap();
    let counter_ok = cert
        .get("no_maximal_path_at_subdivision")
        .is_some_and(|c| c.is_failed())
        && sdim(&c6.graph) == 3
        && sdim(&Graph::complete(3)) == 2;
    if !counter_ok {
        failures.push("K_3 -> C_6 counterexample not detected".to_owned());
    }
    println!(
        "     AC5 counterexample subdivide(K_3) = C_6: {}",
        if counter_ok { "detected" } else { "MISSED" }
    );
    report(
        5,
        "subdivision of tilde(G+) is bipartite, diameter <= 4, sdim preserved",
        &failures,
        &format!("{} graphs, {} violations", entries.len(), failures.len()),
    );
}

#[test]
fn ac6_closed_forms() {
    let mut failures = Vec::new();
    let mut check = |name: String, g: Graph, expected: usize| {
        let got = sdim(&g);
        if got != expected {
            failures.push(format!("{name}: sdim {got}, expected {expected}"));
        }
    };
    for n in 2..=8 {
        check(format!("P_{n}"), Graph::path(n), 1);
    }
    for n in 2..=6 {
        check(format!("K_{n}"), Graph::complete(n), n - 1);
    }
    for n in 3..=8 {
        check(format!("C_{n}"), Graph::cycle(n), n.div_ceil(2));
    }
    for t in 2..=5 {
        check(format!("K_1,{t}"), Graph::star(t), t - 1);
    }
    report(
        6,
        "closed forms for paths, cliques, cycles and stars",
        &failures,
        "22 graphs",
    );
}

#[test]
fn ac7_determinism() {
    let entries = graphs(2..=10, 1, 0xD37);
    let mut failures = Vec::new();
    for e in &entries {
        for method in [Method::Approx, Method::Exact, Method::Brute] {
            let run = |apsp| {
                let opts = SolveOptions {
                    apsp,
                    ..SolveOptions::default()
                };
                solve(&e.graph, method, &opts).unwrap().masked().to_json()
            };
            let first = run(ApspMode::Sequential);
            let second = run(ApspMode::Sequential);
            let parallel = run(ApspMode::Parallel);
            if first != second || first != parallel {
                failures.push(format!("{} {method:?}: reports differ", label(e)));
            }
        }
    }
    report(
        7,
        "masked JSON reports are byte-identical across runs and APSP paths",
        &failures,
        &format!("{} graphs x 3 methods", entries.len()),
    );
}
