//! The `flexcolor` command line.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 graph outside
//! the requested class or mode, 3 resolution stuck, 4 a check that should
//! hold did not (failed configuration, invariant breach, audit contradiction).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use flexcolor_core::discharge::{apply_rules, audit, AuditReport, DischargeError, Mode, Verdict};
use flexcolor_core::listcolor::{is_l_coloring, Color, ListAssignment};
use flexcolor_core::pattern::{find_configurations, find_house, find_hopper, is_class_member, Match, MatchKind};
use flexcolor_core::reducible::{degree_variants, verify_config_with, ReducibilityReport, Witness};
use flexcolor_core::resolve::{
    empirical_epsilon, extend_coloring, find_resolution, oracle_max_satisfaction, ExtendError, Policy,
    ResolveError, DEFAULT_B, DEFAULT_K, ORACLE_MAX_VERTICES,
};
use flexcolor_core::{Class, ConfigId, Graph, PlaneGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::corpus::{generate, CorpusSpec, Generator};
use crate::format::{
    fmt_rational, parse_lists, parse_plane_graph, parse_requests, write_coloring, write_ledger, write_lists,
    write_plane_graph, write_resolution, ParseError, RequestFile,
};

#[derive(Debug, Parser)]
#[command(name = "flexcolor", version, about = "List coloring with requests on hopper-free and house-free plane graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List hoppers, houses and configurations; exit 2 if outside the class.
    Detect {
        graph: PathBuf,
        #[arg(long)]
        class: Class,
    },
    /// Re-verify library configurations (an id or `all`) by exhaustive search.
    VerifyConfig {
        id: String,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: usize,
        /// Check every admissible degree assignment, not only the canonical one.
        #[arg(long)]
        variants: bool,
    },
    /// Build a resolution by peeling configurations.
    Resolve {
        graph: PathBuf,
        #[arg(long)]
        class: Class,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_B)]
        b: usize,
    },
    /// Color the graph by replaying its resolution.
    Color {
        graph: PathBuf,
        #[arg(long)]
        class: Class,
        #[command(flatten)]
        lists: ListArgs,
        /// Precolor vertex V with color C, written `V:C`.
        #[arg(long, value_parser = parse_fix)]
        fix: Option<(usize, Color)>,
        #[arg(long)]
        requests: Option<PathBuf>,
    },
    /// Compare the request-greedy replay with the exact optimum.
    Flex {
        graph: PathBuf,
        #[arg(long)]
        class: Class,
        #[command(flatten)]
        lists: ListArgs,
        #[arg(long)]
        requests: PathBuf,
        /// Also report the worst unit request over all vertices.
        #[arg(long)]
        epsilon: bool,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run one discharging argument and print the charge ledger.
    Discharge {
        graph: PathBuf,
        #[arg(long)]
        mode: Mode,
    },
    /// Audit the discharging argument over a corpus or the given files.
    Audit {
        #[arg(long)]
        class: Class,
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Graph files to audit instead of a generated corpus.
        files: Vec<PathBuf>,
    },
    /// Write a generated corpus.
    Gen {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long)]
        class: Option<Class>,
        /// Directory for one file per graph; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ListArgs {
    /// `lists v1` file; every vertex gets {0, .., k-1} if absent.
    #[arg(long)]
    lists: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_K)]
    k: usize,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    #[arg(long, default_value = "random-triangulation-thinned")]
    generator: Generator,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 4)]
    min_vertices: usize,
    #[arg(long, default_value_t = 40)]
    max_vertices: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl CorpusArgs {
    fn spec(&self, class: Option<Class>) -> CorpusSpec {
        CorpusSpec {
            generator: self.generator,
            count: self.count,
            min_vertices: self.min_vertices,
            max_vertices: self.max_vertices,
            class,
            seed: self.seed,
        }
    }
}

fn parse_fix(s: &str) -> Result<(usize, Color), String> {
    let (v, c) = s.split_once(':').ok_or("expected V:C")?;
    Ok((v.trim().parse().map_err(|_| "bad vertex")?, c.trim().parse().map_err(|_| "bad color")?))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Class(String),
    #[error("{0}")]
    Stuck(String),
    #[error("{0}")]
    Breach(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Input(_) => 1,
            CliError::Class(_) => 2,
            CliError::Stuck(_) => 3,
            CliError::Breach(_) => 4,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn load_graph(path: &Path) -> Result<PlaneGraph, CliError> {
    parse_plane_graph(&read(path)?).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn load_lists(args: &ListArgs, n: usize) -> Result<ListAssignment, CliError> {
    match &args.lists {
        Some(path) => parse_lists(&read(path)?, n).map_err(|source| CliError::Parse { path: path.clone(), source }),
        None => Ok(ListAssignment::uniform(n, &(0..args.k as Color).collect::<Vec<_>>())),
    }
}

fn load_requests(path: &Path, l: &ListAssignment) -> Result<RequestFile, CliError> {
    parse_requests(&read(path)?, l).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn discharge_error(e: DischargeError) -> CliError {
    CliError::Class(e.to_string())
}

/// Parses `args` (program name first) and runs the command. Returns the exit
/// code; reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let mut report = String::new();
    let result = execute(&cli.command, &mut report);
    let _ = out.write_all(report.as_bytes());
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, out: &mut String) -> Result<(), CliError> {
    match command {
        Command::Detect { graph, class } => detect(&load_graph(graph)?, *class, out),
        Command::VerifyConfig { id, k, variants } => verify(id, *k, *variants, out),
        Command::Resolve { graph, class, k, b } => {
            let g = load_graph(graph)?;
            let res = find_resolution(&g, *class, *k, *b).map_err(resolve_error)?;
            out.push_str(&write_resolution(&res));
            Ok(())
        }
        Command::Color { graph, class, lists, fix, requests } => {
            let g = load_graph(graph)?;
            let l = load_lists(lists, g.vertex_count())?;
            let request = requests.as_deref().map(|p| load_requests(p, &l)).transpose()?;
            let policy = match (fix, &request) {
                (Some(_), Some(_)) => return Err(CliError::Input("--fix and --requests exclude each other".into())),
                (Some((v, c)), None) => Policy::Fixed(*v, *c),
                (None, Some(r)) => Policy::RequestGreedy(r.weighted()),
                (None, None) => Policy::Plain,
            };
            let coloring = color(&g, &l, *class, lists.k, &policy)?;
            out.push_str(&write_coloring(&coloring));
            if let Some(r) = &request {
                let w = r.weighted();
                let _ = writeln!(out, "honored {} of {}", fmt_rational(&w.honored(&coloring)), fmt_rational(&w.total()));
            }
            Ok(())
        }
        Command::Flex { graph, class, lists, requests, epsilon, trials, seed } => {
            let g = load_graph(graph)?;
            let l = load_lists(lists, g.vertex_count())?;
            let w = load_requests(requests, &l)?.weighted();
            flex(&g, &l, *class, lists.k, &w, out)?;
            if *epsilon {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let rep = empirical_epsilon(&g, &l, None, *trials, &mut rng)
                    .map_err(|e| CliError::Input(e.to_string()))?;
                let _ = writeln!(
                    out,
                    "epsilon {} over {} requests ({}) seed {seed}",
                    fmt_rational(&rep.min_ratio),
                    rep.requests_evaluated,
                    if rep.exhaustive { "exhaustive" } else { "sampled" }
                );
                for (v, c) in rep.worst.pairs() {
                    let _ = writeln!(out, "worst r {v}: {c}");
                }
            }
            Ok(())
        }
        Command::Discharge { graph, mode } => {
            let g = load_graph(graph)?;
            let ledger = apply_rules(&g, *mode).map_err(discharge_error)?;
            out.push_str(&write_ledger(&ledger));
            let class = match mode {
                Mode::Hopper => Class::H1,
                Mode::House => Class::H2,
            };
            let report = audit(&g, class).map_err(discharge_error)?;
            write_audit_tail(&report, ledger.is_conserved(), out);
            check_audit(&report, ledger.is_conserved())
        }
        Command::Audit { class, corpus, files } => {
            let graphs = if files.is_empty() {
                let spec = corpus.spec(Some(*class));
                let _ = writeln!(out, "corpus {spec}");
                generate(&spec).map_err(|e| CliError::Input(e.to_string()))?
            } else {
                files.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>, _>>()?
            };
            audit_corpus(&graphs, *class, out)
        }
        Command::Gen { corpus, class, out: dir } => {
            let spec = corpus.spec(*class);
            let graphs = generate(&spec).map_err(|e| CliError::Input(e.to_string()))?;
            match dir {
                Some(dir) => {
                    let io = |source| CliError::Io { path: dir.clone(), source };
                    std::fs::create_dir_all(dir).map_err(io)?;
                    for (i, g) in graphs.iter().enumerate() {
                        let path = dir.join(format!("graph-{i:05}.planegraph"));
                        let text = format!("# {spec} index {i}\n{}", write_plane_graph(g));
                        std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
                    }
                    let _ = writeln!(out, "wrote {} graphs to {} ({spec})", graphs.len(), dir.display());
                }
                None => {
                    let _ = writeln!(out, "# corpus {spec}");
                    for (i, g) in graphs.iter().enumerate() {
                        let _ = writeln!(out, "# graph {i}");
                        out.push_str(&write_plane_graph(g));
                    }
                }
            }
            Ok(())
        }
    }
}

fn write_match(out: &mut String, m: &Match) {
    let name = match m.kind {
        MatchKind::Hopper => "hopper".to_string(),
        MatchKind::House => "house".to_string(),
        MatchKind::Config(c) => format!("config {c}"),
    };
    let _ = write!(out, "{name}:");
    for v in &m.map {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
}

fn detect(g: &PlaneGraph, class: Class, out: &mut String) -> Result<(), CliError> {
    let hoppers = find_hopper(g);
    let houses = find_house(g);
    for m in hoppers.iter().chain(&houses).chain(&find_configurations(g, class)) {
        write_match(out, m);
    }
    let _ = writeln!(out, "hoppers {} houses {}", hoppers.len(), houses.len());
    if is_class_member(g, class) {
        let _ = writeln!(out, "class {class}: member");
        Ok(())
    } else {
        let _ = writeln!(out, "class {class}: not a member");
        Err(CliError::Class(format!("graph is not in class {class}")))
    }
}

fn write_report(out: &mut String, id: ConfigId, degrees: &[usize], r: &ReducibilityReport) {
    let degrees: Vec<String> = degrees.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        "config {id} class {} degrees ({}) residual {} systems {}",
        id.class(),
        degrees.join(","),
        r.residual,
        r.systems_checked
    );
    let ok = |b: bool| if b { "ok" } else { "fail" };
    let _ = writeln!(out, "FIX {}", ok(r.fix_ok));
    let _ = writeln!(out, "FORB {}", ok(r.forb_ok));
    for s in &r.forbidding_sets {
        let names: Vec<String> = s.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "forbidding {}", names.join(" "));
    }
    if let Some(w) = &r.witness {
        match w {
            Witness::Fix { vertex, .. } => {
                let _ = writeln!(out, "witness FIX at vertex {vertex}");
            }
            Witness::Forb { set, .. } => {
                let _ = writeln!(out, "witness FORB on {set:?}");
            }
        }
        out.push_str(&write_lists(w.lists()));
    }
}

fn verify(id: &str, k: usize, variants: bool, out: &mut String) -> Result<(), CliError> {
    let ids: Vec<ConfigId> = if id.eq_ignore_ascii_case("all") {
        ConfigId::ALL.to_vec()
    } else {
        vec![id.parse().map_err(|_| CliError::Input(format!("unknown configuration `{id}`")))?]
    };
    let (mut passed, mut total) = (0, 0);
    for id in ids {
        let degree_sets =
            if variants { degree_variants(id) } else { vec![id.pattern().canonical_degrees()] };
        for degrees in degree_sets {
            let r = verify_config_with(id, &degrees, id.class(), k)
                .map_err(|e| CliError::Input(format!("{id}: {e}")))?;
            write_report(out, id, &degrees, &r);
            total += 1;
            passed += usize::from(r.is_reducible());
        }
    }
    let _ = writeln!(out, "reducible {passed}/{total}");
    if passed == total {
        Ok(())
    } else {
        Err(CliError::Breach(format!("{} of {total} checks failed", total - passed)))
    }
}

fn resolve_error(e: ResolveError) -> CliError {
    match e {
        ResolveError::NotInClass(_) => CliError::Class(e.to_string()),
        ResolveError::Stuck { .. } => CliError::Stuck(e.to_string()),
    }
}

fn extend_error(e: ExtendError) -> CliError {
    match e {
        ExtendError::InvariantBreach { .. } => CliError::Breach(e.to_string()),
        _ => CliError::Input(e.to_string()),
    }
}

fn color(g: &PlaneGraph, l: &ListAssignment, class: Class, k: usize, policy: &Policy) -> Result<Vec<Color>, CliError> {
    let res = find_resolution(g, class, k, DEFAULT_B).map_err(resolve_error)?;
    let coloring = extend_coloring(g, l, &res, policy).map_err(extend_error)?;
    if !is_l_coloring(g, l, &coloring) {
        return Err(CliError::Breach("replay produced an improper coloring".into()));
    }
    Ok(coloring)
}

fn flex(
    g: &PlaneGraph,
    l: &ListAssignment,
    class: Class,
    k: usize,
    w: &flexcolor_core::resolve::WeightedRequest,
    out: &mut String,
) -> Result<(), CliError> {
    let coloring = color(g, l, class, k, &Policy::RequestGreedy(w.clone()))?;
    let total = w.total();
    let honored = w.honored(&coloring);
    let ratio = |h| if total == 0.into() { "undefined".to_string() } else { fmt_rational(&(h / total)) };
    let _ = writeln!(out, "greedy honored {} of {} ratio {}", fmt_rational(&honored), fmt_rational(&total), ratio(honored));
    if g.vertex_count() <= ORACLE_MAX_VERTICES && total != 0.into() {
        let best = oracle_max_satisfaction(g, l, w).map_err(|e| CliError::Input(e.to_string()))?;
        let _ = writeln!(out, "oracle honored {} of {} ratio {}", fmt_rational(&best.honored), fmt_rational(&total), ratio(best.honored));
        if honored > best.honored {
            return Err(CliError::Breach("greedy beat the exact optimum".into()));
        }
    } else {
        let _ = writeln!(out, "oracle skipped ({} vertices, limit {ORACLE_MAX_VERTICES})", g.vertex_count());
    }
    Ok(())
}

fn write_audit_tail(report: &AuditReport, conserved: bool, out: &mut String) {
    let _ = writeln!(out, "conserved {}", if conserved { "yes" } else { "no" });
    for (unit, charge) in &report.negative {
        let _ = writeln!(out, "negative {unit}: {}", fmt_rational(charge));
    }
    let _ = writeln!(out, "configurations {}", report.configurations.len());
    let _ = writeln!(out, "verdict {}", report.verdict);
}

fn check_audit(report: &AuditReport, conserved: bool) -> Result<(), CliError> {
    if !conserved {
        return Err(CliError::Breach("charge not conserved".into()));
    }
    if report.verdict == Verdict::TheoremContradiction {
        return Err(CliError::Breach("no configuration and no negative charge".into()));
    }
    Ok(())
}

/// Audits every graph (in parallel) and prints results in input order.
fn audit_corpus(graphs: &[PlaneGraph], class: Class, out: &mut String) -> Result<(), CliError> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(graphs.len().max(1));
    let chunk = graphs.len().div_ceil(threads).max(1);
    let results: Vec<Result<AuditReport, DischargeError>> = std::thread::scope(|s| {
        let handles: Vec<_> = graphs
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|g| audit(g, class)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("audit worker panicked")).collect()
    });
    let mut counts = std::collections::BTreeMap::new();
    let mut failures = 0;
    let mut mode_violations = 0;
    for (i, (g, r)) in graphs.iter().zip(&results).enumerate() {
        match r {
            Ok(r) => {
                let _ = writeln!(
                    out,
                    "graph {i}: vertices {} min-degree {} verdict {} negative {} configurations {} conserved {}",
                    g.vertex_count(),
                    g.min_degree().unwrap_or(0),
                    r.verdict,
                    r.negative.len(),
                    r.configurations.len(),
                    if r.conserved { "yes" } else { "no" }
                );
                *counts.entry(r.verdict).or_insert(0usize) += 1;
                failures += usize::from(check_audit(r, r.conserved).is_err());
            }
            Err(e) => {
                let _ = writeln!(out, "graph {i}: {e}");
                mode_violations += 1;
            }
        }
    }
    for (v, c) in &counts {
        let _ = writeln!(out, "summary {v}: {c}");
    }
    if mode_violations > 0 {
        let _ = writeln!(out, "summary mode-violation: {mode_violations}");
    }
    if failures > 0 {
        return Err(CliError::Breach(format!("{failures} graphs failed the audit")));
    }
    if mode_violations > 0 {
        return Err(CliError::Class(format!("{mode_violations} graphs are outside class {class}")));
    }
    Ok(())
}
