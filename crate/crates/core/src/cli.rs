//! Command-line front end. [`run_command`] is the whole CLI; the `sdim`
//! binary only forwards `argv` and the process streams to it.
//!
//! Exit status: 0 on success, 1 when a verification fails (invalid set,
//! failed gadget check, exhausted search budget), 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cover::{matching_lower_bound, Budget};
use crate::error::Error;
use crate::gadgets::{
    check_certificates, hardness_pipeline, plus_construction, subdivide_edges, tilde_construction,
    CertificateOptions, Check, CheckStatus, GadgetCertificate, GadgetOutput,
};
use crate::graph::{
    apsp, diameter, find_twins, gen_random_connected, graph_properties, parse_graph,
    serialize_graph, ApspMode, Format, Graph, Node,
};
use crate::pipeline::{input_digest, solve, Method, Report, SolveOptions};
use crate::resolving::{
    is_strong_resolving_set, strong_resolving_graph, DEFAULT_NODE_LIMIT, MAX_NODE_LIMIT,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sdim",
    version,
    about = "Strong metric dimension solvers and hardness gadgets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a strong resolving set and emit a verified report.
    Solve(SolveArgs),
    /// Emit the strong resolving graph (mutually maximally distant pairs).
    Srg(SrgArgs),
    /// Build a hardness gadget and check its certificates.
    Gadget(GadgetArgs),
    /// Check whether a node set strongly resolves the graph.
    Verify(VerifyArgs),
    /// Structural summary of a graph.
    Stats(StatsArgs),
    /// Generate a random connected graph.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Graph file to read.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ApspArg {
    Auto,
    Sequential,
    Parallel,
}

impl From<ApspArg> for ApspMode {
    fn from(a: ApspArg) -> Self {
        match a {
            ApspArg::Auto => ApspMode::Auto,
            ApspArg::Sequential => ApspMode::Sequential,
            ApspArg::Parallel => ApspMode::Parallel,
        }
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "approx")]
    method: Method,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputKind,
    /// Time budget in milliseconds for the exact solver.
    #[arg(long)]
    budget: Option<u64>,
    /// Largest graph the brute-force method accepts.
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT,
          value_parser = parse_node_limit)]
    node_limit: usize,
    #[arg(long, value_enum, default_value = "auto")]
    apsp: ApspArg,
}

#[derive(Debug, Args)]
struct SrgArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GadgetChoice {
    Tilde,
    Plus,
    Subdivide,
    Pipeline,
}

#[derive(Debug, Args)]
struct GadgetArgs {
    #[arg(value_enum)]
    kind: GadgetChoice,
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputKind,
    /// Write the constructed graph here instead of stdout (single gadgets),
    /// or a directory for all pipeline stages.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the provenance sidecar JSON here (single gadgets).
    #[arg(long)]
    sidecar: Option<PathBuf>,
    /// Node bound for the brute-force oracle used by the checks.
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT,
          value_parser = parse_node_limit)]
    oracle_limit: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Comma-separated node ids, e.g. `0,2,5`.
    #[arg(long, value_parser = parse_set, allow_hyphen_values = false)]
    set: NodeList,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputKind,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Gnp,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "gnp")]
    model: Model,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

fn parse_node_limit(raw: &str) -> Result<usize, String> {
    let limit: usize = raw
        .parse()
        .map_err(|_| format!("invalid node limit `{raw}`"))?;
    if limit > MAX_NODE_LIMIT {
        return Err(format!("node limit must be at most {MAX_NODE_LIMIT}"));
    }
    Ok(limit)
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct NodeList(Vec<Node>);

/// Parses `--set`; whitespace anywhere is ignored and an empty list is allowed.
fn parse_set(raw: &str) -> Result<NodeList, String> {
    let compact: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(NodeList(Vec::new()));
    }
    let mut nodes = compact
        .split(',')
        .map(|tok| {
            tok.parse::<Node>()
                .map_err(|_| format!("invalid node id `{tok}`"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    nodes.sort_unstable();
    nodes.dedup();
    Ok(NodeList(nodes))
}

struct Style {
    color: bool,
}

impl Style {
    fn paint(&self, text: &str, code: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_owned()
        }
    }

    fn status(&self, check: &Check) -> String {
        match check.status {
            CheckStatus::Passed => self.paint("PASS", "32"),
            CheckStatus::Failed { .. } => self.paint("FAIL", "31"),
            CheckStatus::Skipped { .. } => self.paint("SKIP", "33"),
        }
    }
}

/// Command failure carrying its exit status.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InternalVerificationFailure { .. } | Error::BudgetExceeded { .. } => {
                EXIT_VERIFICATION
            }
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal()
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status. Text output is colored only when `NO_COLOR` is unset and stdout
/// is a terminal.
pub fn run_command<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    let style = Style {
        color: color_enabled(),
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a, stdout),
        Command::Srg(a) => cmd_srg(a, stdout),
        Command::Gadget(a) => cmd_gadget(a, stdout, &style),
        Command::Verify(a) => cmd_verify(a, stdout, &style),
        Command::Stats(a) => cmd_stats(a, stdout),
        Command::Gen(a) => cmd_gen(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn read_graph(input: &InputArgs) -> Result<Graph, Failure> {
    let text = fs::read_to_string(&input.input).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", input.input.display()),
    })?;
    parse_graph(&text, input.format).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", input.input.display()),
    })
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(&a.input)?;
    let options = SolveOptions {
        apsp: a.apsp.into(),
        budget: a.budget.map(Budget::millis),
        node_limit: a.node_limit,
    };
    let report = solve(&g, a.method, &options)?;
    match a.output {
        OutputKind::Json => writeln!(out, "{}", report.to_json())?,
        OutputKind::Text => write_report_text(&report, out)?,
    }
    Ok(EXIT_OK)
}

fn write_report_text(r: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    let method = serde_json::to_value(r.method).expect("method serializes");
    writeln!(out, "method:      {}", method.as_str().unwrap_or_default())?;
    writeln!(out, "size:        {}", r.size)?;
    writeln!(out, "lower bound: {}", r.lower_bound)?;
    writeln!(out, "ratio bound: {}", r.ratio_bound)?;
    writeln!(out, "solution:    {}", join(&r.solution))?;
    writeln!(out, "verified:    {}", r.verified)?;
    writeln!(out, "digest:      {}", r.input_digest)?;
    for (phase, ms) in r.timings.phases() {
        writeln!(out, "time {phase}: {ms:.3} ms")?;
    }
    Ok(())
}

fn join(nodes: &[Node]) -> String {
    nodes
        .iter()
        .map(Node::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_srg(a: SrgArgs, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(&a.input)?;
    let srg = strong_resolving_graph(&g)?;
    write!(out, "{}", serialize_graph(&srg.graph, a.input.format))?;
    Ok(EXIT_OK)
}

fn comment_prefix(format: Format) -> &'static str {
    match format {
        Format::Edgelist => "#",
        Format::Dimacs => "c",
    }
}

fn certificate_json(cert: &GadgetCertificate) -> serde_json::Value {
    serde_json::to_value(cert).expect("certificate serializes")
}

fn gadget_json(out: &GadgetOutput, cert: &GadgetCertificate, format: Format) -> serde_json::Value {
    json!({
        "graph": serialize_graph(&out.graph, format),
        "sidecar": out.sidecar(),
        "certificate": certificate_json(cert),
    })
}

fn write_checks(
    checks: &[Check],
    prefix: &str,
    style: &Style,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    for c in checks {
        let detail = match &c.status {
            CheckStatus::Passed => String::new(),
            CheckStatus::Failed { witness } => format!(" ({witness})"),
            CheckStatus::Skipped { reason } => format!(" ({reason})"),
        };
        writeln!(out, "{prefix} {} {}{detail}", style.status(c), c.name)?;
    }
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })
}

fn status_for(checks: &[&Check]) -> i32 {
    if checks.iter().any(|c| c.is_failed()) {
        EXIT_VERIFICATION
    } else {
        EXIT_OK
    }
}

fn cmd_gadget(a: GadgetArgs, out: &mut dyn Write, style: &Style) -> CmdResult {
    let g = read_graph(&a.input)?;
    let format = a.input.format;
    let options = CertificateOptions {
        oracle_limit: a.oracle_limit,
        cover_budget: None,
    };
    let built = match a.kind {
        GadgetChoice::Tilde => tilde_construction(&g)?,
        GadgetChoice::Plus => plus_construction(&g)?,
        GadgetChoice::Subdivide => subdivide_edges(&g),
        GadgetChoice::Pipeline => return gadget_pipeline(&g, &a, &options, out, style),
    };
    let cert = check_certificates(&built, &g, &options)?;
    let graph_text = serialize_graph(&built.graph, format);
    let sidecar = serde_json::to_string_pretty(&built.sidecar()).expect("sidecar serializes");
    if let Some(path) = &a.out {
        write_file(path, &graph_text)?;
    }
    if let Some(path) = &a.sidecar {
        write_file(path, &sidecar)?;
    }
    match a.output {
        OutputKind::Json => {
            let doc = gadget_json(&built, &cert, format);
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        OutputKind::Text => {
            let prefix = comment_prefix(format);
            if a.out.is_none() {
                write!(out, "{graph_text}")?;
            }
            if a.sidecar.is_none() {
                for (id, role) in built.provenance.iter().enumerate() {
                    let role = serde_json::to_string(role).expect("role serializes");
                    writeln!(out, "{prefix} node {id} {role}")?;
                }
            }
            write_checks(&cert.checks, prefix, style, out)?;
        }
    }
    Ok(status_for(&cert.checks.iter().collect::<Vec<_>>()))
}

fn gadget_pipeline(
    g: &Graph,
    a: &GadgetArgs,
    options: &CertificateOptions,
    out: &mut dyn Write,
    style: &Style,
) -> CmdResult {
    let format = a.input.format;
    let result = hardness_pipeline(g, options)?;
    let certs = &result.certificates;
    let stages = [
        ("plus", &result.plus, &certs.plus),
        ("tilde_of_plus", &result.tilde_of_plus, &certs.tilde_of_plus),
        ("subdivided", &result.subdivided, &certs.subdivided),
    ];
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir)?;
        for (name, stage, _) in &stages {
            write_file(
                &dir.join(format!("{name}.txt")),
                &serialize_graph(&stage.graph, format),
            )?;
            let sidecar = serde_json::to_string_pretty(&stage.sidecar()).expect("sidecar");
            write_file(&dir.join(format!("{name}.json")), &sidecar)?;
        }
    }
    match a.output {
        OutputKind::Json => {
            let mut doc = serde_json::Map::new();
            for (name, stage, cert) in &stages {
                doc.insert((*name).into(), gadget_json(stage, cert, format));
            }
            doc.insert(
                "restricted_classes".into(),
                serde_json::to_value(&certs.restricted_classes).expect("checks serialize"),
            );
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        OutputKind::Text => {
            for (name, stage, cert) in &stages {
                writeln!(
                    out,
                    "{name}: n={} m={}",
                    stage.graph.node_count(),
                    stage.graph.edge_count()
                )?;
                write_checks(&cert.checks, "  ", style, out)?;
            }
            writeln!(out, "restricted classes:")?;
            write_checks(&certs.restricted_classes, "  ", style, out)?;
        }
    }
    Ok(status_for(&certs.all().collect::<Vec<_>>()))
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write, style: &Style) -> CmdResult {
    let g = read_graph(&a.input)?;
    let cert = is_strong_resolving_set(&g, &a.set.0)?;
    match a.output {
        OutputKind::Json => {
            let doc = json!({
                "input_digest": input_digest(&g),
                "set": a.set.0,
                "verified": cert.valid,
                "witness_failure": cert.witness_failure,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        OutputKind::Text => match cert.witness_failure {
            None => writeln!(out, "{} verified=true", style.paint("PASS", "32"))?,
            Some((u, v)) => writeln!(
                out,
                "{} verified=false: pair {{{u}, {v}}} is not strongly resolved",
                style.paint("FAIL", "31")
            )?,
        },
    }
    Ok(if cert.valid {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    })
}

fn cmd_stats(a: StatsArgs, out: &mut dyn Write) -> CmdResult {
    let g = read_graph(&a.input)?;
    let props = graph_properties(&g);
    let twins = find_twins(&g);
    let (diam, srg_m, srg_lb) = if props.connected {
        let srg = strong_resolving_graph(&g)?;
        (
            Some(diameter(&apsp(&g)?)),
            Some(srg.graph.edge_count()),
            Some(matching_lower_bound(&srg.graph)),
        )
    } else {
        (None, None, None)
    };
    let doc = json!({
        "input_digest": input_digest(&g),
        "n": props.n,
        "m": props.m,
        "connected": props.connected,
        "bipartite": props.bipartite,
        "diameter": diam,
        "kappa": twins.kappa,
        "srg_edges": srg_m,
        "sdim_lower_bound": srg_lb,
    });
    match a.output {
        OutputKind::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        OutputKind::Text => {
            for (key, value) in doc.as_object().expect("object") {
                writeln!(out, "{key}: {value}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> CmdResult {
    let g = match a.model {
        Model::Gnp => gen_random_connected(a.n, a.p, a.seed)?,
    };
    write!(out, "{}", serialize_graph(&g, a.format))?;
    Ok(EXIT_OK)
}
