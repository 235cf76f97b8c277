use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use strong_dim::cli::{run_command, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION};
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sdim").chain(args.iter().copied());
    let code = run_command(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn p3(dir: &TempDir) -> PathBuf {
    write(dir, "p3.txt", "3 2\n0 1\n1 2\n")
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("{e}: {text}"))
}

#[test]
fn solve_approx_json_on_path() {
    let dir = TempDir::new().unwrap();
    let input = p3(&dir);
    let r = run(&[
        "solve",
        "--method",
        "approx",
        "--input",
        s(&input),
        "--output",
        "json",
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["size"], 2);
    assert_eq!(v["lower_bound"], 1);
    assert_eq!(v["ratio_bound"], "2/1");
    assert_eq!(v["verified"], true);
    assert_eq!(v["solution"], serde_json::json!([0, 2]));
    let order = [
        "input_digest",
        "method",
        "solution",
        "size",
        "lower_bound",
        "ratio_bound",
        "verified",
        "skipped_checks",
        "timings",
    ];
    let positions: Vec<usize> = order
        .iter()
        .map(|k| r.stdout.find(&format!("\"{k}\"")).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn solve_methods_agree_on_optimum() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    for method in ["exact", "brute"] {
        let r = run(&[
            "solve",
            "--method",
            method,
            "--input",
            s(&input),
            "--output",
            "json",
        ]);
        assert_eq!(r.code, EXIT_OK);
        let v = json(&r.stdout);
        assert_eq!(v["size"], 3);
        assert_eq!(v["lower_bound"], 3);
        assert_eq!(v["method"], method);
    }
}

#[test]
fn dimacs_input_matches_edgelist() {
    let dir = TempDir::new().unwrap();
    let edgelist = p3(&dir);
    let dimacs = write(&dir, "p3.dimacs", "c path\np edge 3 2\ne 1 2\ne 2 3\n");
    let a = run(&["solve", "--input", s(&edgelist), "--output", "json"]);
    let b = run(&[
        "solve",
        "--input",
        s(&dimacs),
        "--format",
        "dimacs",
        "--output",
        "json",
    ]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(b.code, EXIT_OK, "{}", b.stderr);
    assert_eq!(
        json(&a.stdout)["input_digest"],
        json(&b.stdout)["input_digest"]
    );
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let input = p3(&dir);
    let ok = run(&[
        "verify",
        "--input",
        s(&input),
        "--set",
        "0",
        "--output",
        "json",
    ]);
    assert_eq!(ok.code, EXIT_OK);
    assert_eq!(json(&ok.stdout)["verified"], true);

    let spaced = run(&["verify", "--input", s(&input), "--set", " 2 , 0 "]);
    assert_eq!(spaced.code, EXIT_OK);

    let bad = run(&[
        "verify",
        "--input",
        s(&input),
        "--set",
        "1",
        "--output",
        "json",
    ]);
    assert_eq!(bad.code, EXIT_VERIFICATION);
    let v = json(&bad.stdout);
    assert_eq!(v["verified"], false);
    assert_eq!(v["witness_failure"], serde_json::json!([0, 2]));
}

#[test]
fn usage_and_input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let input = p3(&dir);
    let missing = dir.path().join("missing.txt");
    let cases: Vec<Vec<&str>> = vec![
        vec!["solve", "--input", s(&input), "--bogus"],
        vec!["solve", "--input", s(&input), "--method", "magic"],
        vec!["solve", "--input", s(&missing)],
        vec!["verify", "--input", s(&input), "--set", "0,x"],
        vec!["verify", "--input", s(&input), "--set", "7"],
        vec!["solve", "--input", s(&input), "--node-limit", "65"],
        vec![],
    ];
    for args in cases {
        let r = run(&args);
        assert_eq!(r.code, EXIT_USAGE, "{args:?}: {}", r.stderr);
        assert!(!r.stderr.is_empty(), "{args:?}");
    }
    let flag = run(&["solve", "--input", s(&input), "--bogus"]);
    assert!(flag.stderr.contains("--bogus"));
}

#[test]
fn malformed_and_disconnected_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let malformed = write(&dir, "bad.txt", "3 2\n0 1\n1 x\n");
    let r = run(&["solve", "--input", s(&malformed)]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);

    let split = write(&dir, "split.txt", "4 2\n0 1\n2 3\n");
    let r = run(&["solve", "--input", s(&split)]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn exhausted_budget_exits_one() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("14 91\n");
    for u in 0..14 {
        for v in u + 1..14 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    let input = write(&dir, "k14.txt", &text);
    let r = run(&[
        "solve",
        "--method",
        "exact",
        "--input",
        s(&input),
        "--budget",
        "0",
    ]);
    assert_eq!(r.code, EXIT_VERIFICATION, "{}", r.stderr);
}

#[test]
fn gadget_plus_writes_graph_sidecar_and_certificate() {
    let dir = TempDir::new().unwrap();
    let input = p3(&dir);
    let out = dir.path().join("plus.txt");
    let sidecar = dir.path().join("plus.json");
    let r = run(&[
        "gadget",
        "plus",
        "--input",
        s(&input),
        "--out",
        s(&out),
        "--sidecar",
        s(&sidecar),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert!(r.stdout.contains("PASS kappa_zero"));
    let graph = std::fs::read_to_string(&out).unwrap();
    assert!(graph.starts_with("6 8\n"));
    let meta = json(&std::fs::read_to_string(&sidecar).unwrap());
    assert_eq!(meta["kind"], "plus");
    assert_eq!(meta["params"]["k"], 2);
    assert_eq!(meta["provenance"][5]["role"], "y_universal");
}

#[test]
fn gadget_json_and_failing_pipeline() {
    let dir = TempDir::new().unwrap();
    let input = p3(&dir);
    let r = run(&["gadget", "tilde", "--input", s(&input), "--output", "json"]);
    assert_eq!(r.code, EXIT_OK);
    let v = json(&r.stdout);
    assert_eq!(v["sidecar"]["params"]["kappa"], 2);
    assert!(v["graph"].as_str().unwrap().starts_with("6 8\n"));

    let k3 = write(&dir, "k3.txt", "3 3\n0 1\n0 2\n1 2\n");
    let r = run(&["gadget", "subdivide", "--input", s(&k3)]);
    assert_eq!(r.code, EXIT_VERIFICATION);
    assert!(r.stdout.contains("FAIL no_maximal_path_at_subdivision"));

    let out_dir = dir.path().join("stages");
    let r = run(&[
        "gadget",
        "pipeline",
        "--input",
        s(&input),
        "--out",
        s(&out_dir),
    ]);
    assert_eq!(r.code, EXIT_VERIFICATION);
    assert!(std::fs::read_dir(&out_dir).unwrap().count() >= 3);
}

#[test]
fn srg_stats_and_gen() {
    let dir = TempDir::new().unwrap();
    let input = p3(&dir);
    let r = run(&["srg", "--input", s(&input)]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.stdout, "3 1\n0 2\n");

    let r = run(&["stats", "--input", s(&input), "--output", "json"]);
    assert_eq!(r.code, EXIT_OK);
    let v = json(&r.stdout);
    assert_eq!(v["diameter"], 2);
    assert_eq!(v["kappa"], 2);
    assert_eq!(v["srg_edges"], 1);

    let a = run(&[
        "gen", "--model", "gnp", "--n", "8", "--p", "0.4", "--seed", "7",
    ]);
    let b = run(&[
        "gen", "--model", "gnp", "--n", "8", "--p", "0.4", "--seed", "7",
    ]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
    let generated = write(&dir, "gen.txt", &a.stdout);
    assert_eq!(run(&["solve", "--input", s(&generated)]).code, EXIT_OK);
    assert_eq!(run(&["gen", "--n", "3", "--p", "1.5"]).code, EXIT_USAGE);
}

#[test]
fn json_reports_are_deterministic_across_apsp_paths() {
    let dir = TempDir::new().unwrap();
    let g = run(&["gen", "--n", "10", "--p", "0.5", "--seed", "3"]);
    let input = write(&dir, "g.txt", &g.stdout);
    for method in ["approx", "exact", "brute"] {
        let masked = |apsp: &str| {
            let r = run(&[
                "solve",
                "--method",
                method,
                "--input",
                s(&input),
                "--output",
                "json",
                "--apsp",
                apsp,
            ]);
            assert_eq!(r.code, EXIT_OK);
            let mut v = json(&r.stdout);
            for (_, ms) in v["timings"].as_object_mut().unwrap() {
                *ms = Value::from(0.0);
            }
            serde_json::to_string(&v).unwrap()
        };
        let seq = masked("sequential");
        assert_eq!(seq, masked("sequential"));
        assert_eq!(seq, masked("parallel"));
    }
}

#[test]
fn binary_reports_exit_status() {
    let dir = TempDir::new().unwrap();
    let input = p3(&dir);
    let bin = env!("CARGO_BIN_EXE_sdim");
    let status = |set: &str| {
        Command::new(bin)
            .args(["verify", "--input", s(&input), "--set", set])
            .env("NO_COLOR", "1")
            .output()
            .unwrap()
    };
    let ok = status("0");
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(!String::from_utf8_lossy(&ok.stdout).contains('\x1b'));
    assert_eq!(status("1").status.code(), Some(EXIT_VERIFICATION));
    assert_eq!(status("a").status.code(), Some(EXIT_USAGE));
}
