//! Command-line front end: verification runs over ranges of k, oracle-backed
//! property checks of graph files, and the degree-capped special search that
//! reproduces the known smallest cubic graphs without 4- and 8-cycles.
//!
//! Exit codes: 0 all requested verdicts verified (or special enumeration
//! found its targets), 1 a counterexample was found, 2 usage or input error,
//! 3 inconclusive (vertex budget exhausted, or special found nothing).

use clap::{Args, Parser, Subcommand};
use egc_core::explore::{
    run_verification_with_sink, special_search_with_sink, Certificate, ProgressEvent,
    ProgressSink,
};
use egc_core::graph::bits;
use egc_core::{oracle, Graph, OutcomeKind, SearchConfig};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Largest graph the oracle-backed `check` command will accept.
const ORACLE_MAX_VERTICES: usize = 26;

const EXIT_VERIFIED: u8 = 0;
const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "egc",
    about = "Exhaustive search engine for the Erdős–Gyárfás conjecture on graphs without long induced paths",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the conjecture for P_k-free graphs over a k range
    Verify(VerifyArgs),
    /// Report oracle-backed properties of a graph file
    Check(CheckArgs),
    /// Collect all degree-capped counterexamples up to a vertex budget and
    /// group them by isomorphism
    Special(SpecialArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Single value (`11`) or inclusive range (`3..11`)
    #[arg(long = "k", value_parser = parse_k_range)]
    k: KRange,
    /// `pow2` or a comma-separated length list such as `4,8`
    #[arg(long, default_value = "pow2", value_parser = parse_forbid)]
    forbid: egc_core::ForbiddenCycleSpec,
    /// Worker threads (1 = serial engine)
    #[arg(long, default_value_t = default_threads())]
    threads: usize,
    /// Depth above which branches are spawned as parallel tasks
    #[arg(long = "spawn-depth", default_value_t = 2)]
    spawn_depth: usize,
    /// Vertex budget; exceeding it makes the run INCONCLUSIVE
    #[arg(long = "max-vertices")]
    max_vertices: Option<usize>,
    /// Print an aggregate statistics block after the per-k rows
    #[arg(long)]
    stats: bool,
    /// off, info, debug (per-node progress) or trace (per-branch safe sets)
    #[arg(long, default_value = "info", value_parser = parse_log_level)]
    log: LogLevel,
    /// Directory for certificate files
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Graph file: edge list (`n=...` header) or graph6
    #[arg(long = "in")]
    input: PathBuf,
    /// Induced-path parameter for the counterexample verdict
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "pow2", value_parser = parse_forbid)]
    forbid: egc_core::ForbiddenCycleSpec,
}

#[derive(Args)]
struct SpecialArgs {
    /// Induced-path parameter; must be at least 18 so the targets survive
    #[arg(long, default_value_t = 18)]
    k: usize,
    #[arg(long, default_value = "4,8", value_parser = parse_forbid)]
    forbid: egc_core::ForbiddenCycleSpec,
    /// Degree cap applied to every vertex
    #[arg(long = "max-degree", default_value_t = 3)]
    max_degree: usize,
    /// Vertex budget for the collection run
    #[arg(long = "max-vertices", default_value_t = 24)]
    max_vertices: usize,
    #[arg(long, default_value_t = default_threads())]
    threads: usize,
    #[arg(long = "spawn-depth", default_value_t = 2)]
    spawn_depth: usize,
    #[arg(long, default_value = "info", value_parser = parse_log_level)]
    log: LogLevel,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum LogLevel {
    Off,
    Info,
    Debug,
    Trace,
}

#[derive(Clone, Copy, Debug)]
struct KRange {
    lo: usize,
    hi: usize,
}

fn parse_k_range(s: &str) -> Result<KRange, String> {
    let parse_one = |t: &str| -> Result<usize, String> {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad k value {t:?}"))
    };
    let range = match s.split_once("..") {
        Some((lo, hi)) => KRange {
            lo: parse_one(lo)?,
            hi: parse_one(hi.strip_prefix('=').unwrap_or(hi))?,
        },
        None => {
            let k = parse_one(s)?;
            KRange { lo: k, hi: k }
        }
    };
    if range.lo < 3 {
        return Err(format!("k must be at least 3, got {}", range.lo));
    }
    if range.hi < range.lo {
        return Err(format!("empty k range {}..{}", range.lo, range.hi));
    }
    Ok(range)
}

fn parse_forbid(s: &str) -> Result<egc_core::ForbiddenCycleSpec, String> {
    if s.eq_ignore_ascii_case("pow2") {
        return Ok(egc_core::ForbiddenCycleSpec::powers_of_two());
    }
    let mut lengths = Vec::new();
    for part in s.split(',') {
        let l: usize = part
            .trim()
            .parse()
            .map_err(|_| format!("bad cycle length {part:?}"))?;
        if l < 3 {
            return Err(format!("cycle length {l} is below 3"));
        }
        lengths.push(l);
    }
    if lengths.is_empty() {
        return Err("empty forbidden set".into());
    }
    Ok(egc_core::ForbiddenCycleSpec::explicit(lengths))
}

fn parse_log_level(s: &str) -> Result<LogLevel, String> {
    match s.to_ascii_lowercase().as_str() {
        "off" => Ok(LogLevel::Off),
        "info" => Ok(LogLevel::Info),
        "debug" => Ok(LogLevel::Debug),
        "trace" => Ok(LogLevel::Trace),
        other => Err(format!("unknown log level {other:?}")),
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Stderr logger for engine progress events. The anchor is printed as -1 when
/// no low-degree vertex exists, matching the search logs this tool descends
/// from.
struct PrintSink {
    level: LogLevel,
}

impl ProgressSink for PrintSink {
    fn on_event(&self, event: &ProgressEvent) {
        match event {
            ProgressEvent::NodeEntered { depth, n } => {
                if self.level >= LogLevel::Debug {
                    eprintln!("[debug] node depth={depth} n={n}");
                }
            }
            ProgressEvent::BranchExplored {
                depth,
                n,
                safe_set,
                pruned_by_path,
                anchor,
            } => {
                if self.level >= LogLevel::Trace {
                    let anchor = anchor.map_or(-1, |a| a as i64);
                    eprintln!(
                        "[trace] depth={depth} n={n} S={} pruned_by_path={pruned_by_path} anchor={anchor}",
                        fmt_set(*safe_set)
                    );
                }
            }
            ProgressEvent::CertificateFound { depth, n } => {
                if self.level >= LogLevel::Info {
                    eprintln!("[info] counterexample found at depth={depth} n={n}");
                }
            }
        }
    }
}

fn fmt_set(mask: u64) -> String {
    let mut out = String::from("{");
    for (i, v) in bits(mask).enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{v}");
    }
    out.push('}');
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Check(args) => cmd_check(args),
        Command::Special(args) => cmd_special(args),
    };
    ExitCode::from(code)
}

fn cmd_verify(args: VerifyArgs) -> u8 {
    let mut cfg = SearchConfig::new(args.k.lo, args.forbid.clone());
    cfg.threads = args.threads;
    cfg.spawn_depth = args.spawn_depth;
    cfg.max_vertices = args.max_vertices;
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }

    println!(
        "config: forbid={} threads={} spawn_depth={} max_vertices={}",
        args.forbid,
        args.threads,
        args.spawn_depth,
        args.max_vertices
            .map_or_else(|| "none".into(), |m| m.to_string())
    );

    let sink = PrintSink { level: args.log };
    let mut total_nodes = 0u64;
    let mut total_sets = 0u64;
    let mut total_time = 0.0f64;
    let mut final_verdict = OutcomeKind::Verified;
    let mut cert_paths: Vec<PathBuf> = Vec::new();

    for k in args.k.lo..=args.k.hi {
        let outcome = match run_verification_with_sink(k, &cfg, &sink) {
            Ok(o) => o,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        let secs = outcome.wall.as_secs_f64();
        total_nodes += outcome.stats.nodes_expanded;
        total_sets += outcome.stats.safe_sets;
        total_time += secs;
        println!(
            "k={k} verdict={} nodes={} max_depth={} safe_sets={} time_s={secs:.3}",
            verdict_str(outcome.kind),
            outcome.stats.nodes_expanded,
            outcome.stats.max_depth,
            outcome.stats.safe_sets
        );

        if outcome.kind != OutcomeKind::Verified {
            final_verdict = outcome.kind;
            for (i, cert) in outcome.certificates.iter().enumerate() {
                println!("counterexample (k={k}, #{i}):");
                print!("{}", egc_core::io::emit_edge_list(cert.graph()));
                if let Some(dir) = &args.out {
                    match write_certificate(dir, &format!("counterexample_k{k}_{i}"), cert) {
                        Ok(mut paths) => cert_paths.append(&mut paths),
                        Err(e) => {
                            eprintln!("error: writing certificate: {e}");
                            return EXIT_USAGE;
                        }
                    }
                }
            }
            // verdicts for larger k depend on all smaller k being verified
            break;
        }
    }

    if args.stats {
        println!("stats: total_nodes={total_nodes} total_safe_sets={total_sets} total_time_s={total_time:.3}");
    }
    for p in &cert_paths {
        println!("certificate_file: {}", p.display());
    }
    match final_verdict {
        OutcomeKind::Verified => {
            println!("result: VERIFIED (k={}..{})", args.k.lo, args.k.hi);
            EXIT_VERIFIED
        }
        OutcomeKind::Counterexample => {
            println!("result: COUNTEREXAMPLE");
            EXIT_COUNTEREXAMPLE
        }
        OutcomeKind::BudgetExhausted => {
            println!("result: INCONCLUSIVE (vertex budget exhausted before the search finished)");
            EXIT_INCONCLUSIVE
        }
    }
}

fn verdict_str(kind: OutcomeKind) -> &'static str {
    match kind {
        OutcomeKind::Verified => "VERIFIED",
        OutcomeKind::Counterexample => "COUNTEREXAMPLE",
        OutcomeKind::BudgetExhausted => "INCONCLUSIVE",
    }
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("reading {}: {e}", path.display()))?;
    let looks_like_edge_list = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("n="));
    if looks_like_edge_list {
        egc_core::io::parse_edge_list(&text).map_err(|e| e.to_string())
    } else {
        egc_core::io::parse_graph6(text.trim()).map_err(|e| e.to_string())
    }
}

fn cmd_check(args: CheckArgs) -> u8 {
    if args.k < 3 {
        eprintln!("error: k must be at least 3");
        return EXIT_USAGE;
    }
    let g = match load_graph(&args.input) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if g.n() > ORACLE_MAX_VERTICES {
        eprintln!(
            "error: graph has {} vertices; the oracle-backed check is limited to {ORACLE_MAX_VERTICES}",
            g.n()
        );
        return EXIT_USAGE;
    }

    let spectrum = oracle::all_cycle_lengths(&g);
    let forbidden_present: Vec<usize> = spectrum
        .lengths()
        .iter()
        .copied()
        .filter(|&l| args.forbid.is_forbidden(l))
        .collect();
    let lip = oracle::longest_induced_path(&g);
    let verdict = oracle::is_counterexample(&g, args.k, &args.forbid);

    println!("n={} edges={}", g.n(), g.edge_count());
    println!(
        "degree_min={} degree_max={}",
        g.min_degree().unwrap_or(0),
        g.max_degree().unwrap_or(0)
    );
    println!("cycle_lengths={}", fmt_lengths(spectrum.lengths().iter()));
    println!(
        "forbid={} forbidden_present={}",
        args.forbid,
        if forbidden_present.is_empty() {
            "none".to_string()
        } else {
            fmt_lengths(forbidden_present.iter())
        }
    );
    println!("longest_induced_path={lip}");
    println!(
        "counterexample_shape={} (k={}, forbid={})",
        verdict, args.k, args.forbid
    );
    if verdict {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_VERIFIED
    }
}

fn fmt_lengths<'a, I: Iterator<Item = &'a usize>>(lengths: I) -> String {
    let mut out = String::new();
    for (i, l) in lengths.enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{l}");
    }
    if out.is_empty() {
        out.push_str("none");
    }
    out
}

fn cmd_special(args: SpecialArgs) -> u8 {
    if args.k < 18 {
        eprintln!("error: special mode needs k at least 18 so the target graphs are not pruned");
        return EXIT_USAGE;
    }
    let mut cfg = SearchConfig::new(args.k, args.forbid.clone());
    cfg.degree_cap = Some(args.max_degree);
    cfg.max_vertices = Some(args.max_vertices);
    cfg.collect_all = true;
    cfg.threads = args.threads;
    cfg.spawn_depth = args.spawn_depth;
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }

    println!(
        "config: special forbid={} max_degree={} max_vertices={} k={} threads={}",
        args.forbid, args.max_degree, args.max_vertices, args.k, args.threads
    );

    let sink = PrintSink { level: args.log };
    let outcome = match special_search_with_sink(&cfg, &sink) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    println!(
        "search: certificates={} nodes={} max_depth={} safe_sets={} time_s={:.3}",
        outcome.certificates.len(),
        outcome.stats.nodes_expanded,
        outcome.stats.max_depth,
        outcome.stats.safe_sets,
        outcome.wall.as_secs_f64()
    );

    if outcome.certificates.is_empty() {
        println!("result: INCONCLUSIVE (no certificate within {} vertices)", args.max_vertices);
        return EXIT_INCONCLUSIVE;
    }

    let classes = isomorphism_classes(&outcome.certificates);
    let min_order = classes.iter().map(|c| c.graph().n()).min().unwrap();
    let mut by_order: std::collections::BTreeMap<usize, Vec<&Certificate>> =
        std::collections::BTreeMap::new();
    for rep in &classes {
        by_order.entry(rep.graph().n()).or_default().push(rep);
    }
    for (order, reps) in &by_order {
        let sixteen: Vec<&str> = reps
            .iter()
            .map(|r| {
                if oracle::all_cycle_lengths(r.graph()).contains(16) {
                    "yes"
                } else {
                    "no"
                }
            })
            .collect();
        println!(
            "order={order} classes={} has_16_cycle={}",
            reps.len(),
            sixteen.join(",")
        );
    }
    println!("minimum_order={min_order}");

    if let Some(dir) = &args.out {
        for (order, reps) in &by_order {
            for (ci, rep) in reps.iter().enumerate() {
                if let Err(e) =
                    write_certificate(dir, &format!("special_order{order}_class{ci}"), rep)
                {
                    eprintln!("error: writing certificate: {e}");
                    return EXIT_USAGE;
                }
            }
        }
        println!("certificates_written_to: {}", dir.display());
    }
    EXIT_VERIFIED
}

/// One representative per isomorphism class, after an exact-duplicate pass.
fn isomorphism_classes(certs: &[Certificate]) -> Vec<&Certificate> {
    let mut distinct: Vec<&Certificate> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for c in certs {
        if seen.insert(c.graph().fingerprint()) {
            distinct.push(c);
        }
    }
    let mut reps: Vec<&Certificate> = Vec::new();
    for c in distinct {
        if !reps
            .iter()
            .any(|r| oracle::are_isomorphic(r.graph(), c.graph()))
        {
            reps.push(c);
        }
    }
    reps
}

fn write_certificate(dir: &Path, stem: &str, cert: &Certificate) -> Result<Vec<PathBuf>, String> {
    std::fs::create_dir_all(dir).map_err(|e| format!("creating {}: {e}", dir.display()))?;
    let mut paths = Vec::new();

    let txt = dir.join(format!("{stem}.txt"));
    let mut doc = String::new();
    match cert.validate() {
        Ok(report) => {
            let _ = writeln!(
                doc,
                "# verified: min_degree={} longest_induced_path={} (< k={}) cycle_lengths={}",
                report.min_degree,
                report.longest_induced_path,
                cert.path_parameter(),
                fmt_lengths(report.cycle_lengths.iter())
            );
        }
        Err(e) => {
            return Err(format!("certificate failed oracle validation: {e}"));
        }
    }
    doc.push_str(&egc_core::io::emit_edge_list(cert.graph()));
    std::fs::write(&txt, doc).map_err(|e| format!("writing {}: {e}", txt.display()))?;
    paths.push(txt);

    let g6 = dir.join(format!("{stem}.g6"));
    let encoded = egc_core::io::emit_graph6(cert.graph()).map_err(|e| e.to_string())?;
    std::fs::write(&g6, encoded + "\n").map_err(|e| format!("writing {}: {e}", g6.display()))?;
    paths.push(g6);

    Ok(paths)
}
