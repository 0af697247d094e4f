//! The `xgadget` command line. Exit codes: 0 ok, 1 a check or claim failed,
//! 2 unreadable or malformed input, 3 precondition or budget violation, 4 usage.

use crate::dynamic::DynamicExpanderState;
use crate::error::{Error, Result};
use crate::gadget::{self, ExpanderizedGraph, GadgetParams, Role};
use crate::graph::Graph;
use crate::io::{self, EdgeUpdate, Op};
use crate::measure::{self, EXACT_LIMIT};
use crate::oracle;
use crate::ratio::{self, parse_rational, Rational};
use crate::report::{Check, RunReport};
use crate::verify::{self, Subject};
use crate::wter::{self, SolutionMap};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Debug, Parser)]
#[command(name = "xgadget", version, about = "Worst-case to expander-case graph reductions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Apply a core gadget to an edge list.
    Expanderize(ExpanderizeArgs),
    /// Run an update stream through the dynamic gadget and emit the G_exp event log.
    Dynamize(DynamizeArgs),
    /// Reduce a problem instance to an expander instance plus a solution map.
    Wter(WterArgs),
    /// Build a graphical OMv instance and answer st-distance queries on it.
    OmvGen(OmvGenArgs),
    /// Print the exact value of a problem on an edge list.
    Oracle(OracleArgs),
    /// Check claims against a graph or an event log.
    Verify(VerifyArgs),
    /// Generate seeded test data.
    #[command(subcommand)]
    Gen(GenCmd),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Plain,
    Tradeoff,
    Bipartite,
}

#[derive(Debug, Args)]
struct ExpanderizeArgs {
    #[arg(long, value_enum, default_value = "plain")]
    mode: ModeArg,
    #[arg(long, default_value = "1")]
    eps: String,
    #[arg(long, default_value = "1")]
    delta: String,
    input: PathBuf,
    output: PathBuf,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DynamizeArgs {
    input: PathBuf,
    updates: PathBuf,
    #[arg(long)]
    emit: PathBuf,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Check the gadget invariants after every K-th input update (0 disables).
    #[arg(long, default_value_t = 1)]
    check_every: usize,
    /// Write the final G_exp as an edge list.
    #[arg(long = "final")]
    final_graph: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WterProblem {
    MaxCut,
    Densest,
    Densify,
    Matching,
    VertexCover,
    Bpm,
    KClique,
    HSubgraph,
    MaxClique,
    DominatingSet,
}

#[derive(Debug, Args)]
struct WterArgs {
    #[arg(value_enum)]
    problem: WterProblem,
    input: PathBuf,
    output: PathBuf,
    #[arg(long)]
    map: PathBuf,
    #[arg(long)]
    report: Option<PathBuf>,
    /// ε for max-cut (default 1) and max-clique / dominating-set (default 1/2).
    #[arg(long)]
    eps: Option<String>,
    /// Clique size C for densify.
    #[arg(long, default_value_t = 1)]
    c: usize,
    /// Clique order for k-clique.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Pattern edge list for h-subgraph.
    #[arg(long)]
    pattern: Option<PathBuf>,
    /// Densest only: drive `--updates` through the dynamic gadget.
    #[arg(long)]
    dynamic: bool,
    #[arg(long, requires = "dynamic")]
    updates: Option<PathBuf>,
    #[arg(long, requires = "dynamic")]
    emit: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OmvGenArgs {
    matrix: PathBuf,
    #[arg(long)]
    queries: PathBuf,
    #[arg(long)]
    emit: PathBuf,
    #[arg(long)]
    answers: PathBuf,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleProblem {
    MaxCut,
    Densest,
    Matching,
    VertexCover,
    DominatingSet,
    MaxClique,
    KClique,
    Bpm,
    Distance,
    Conductance,
    EdgeExpansion,
    HSubgraph,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(value_enum)]
    problem: OracleProblem,
    input: PathBuf,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    pattern: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Edge list or `# vertices` event log.
    input: PathBuf,
    /// `{"claims": [...]}` or an expanderize report.
    claims: PathBuf,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum GenCmd {
    /// Random graph: G(n, m) with `--m`, G(n, p) with `--p`.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        /// Only edges between the halves 0..n/2 and n/2..n.
        #[arg(long)]
        bipartite: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        output: PathBuf,
    },
    /// Random toggles of vertex pairs of a graph: present edges are deleted, absent ones inserted.
    Updates {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        output: PathBuf,
    },
    /// Random k×k 0/1 matrix.
    Matrix {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        output: PathBuf,
    },
    /// Random query vector pairs.
    Queries {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        output: PathBuf,
    },
}

/// Failure of a run, carrying its exit code.
enum Fail {
    Error(Error),
    Usage(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Error(e)
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Io(_) => 2,
        Error::UnknownClaim(_) => 4,
        _ => 3,
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let command: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(cli.cmd, &command) {
        Ok(code) => code,
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            4
        }
        Err(Fail::Error(e)) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Cmd, command: &[String]) -> std::result::Result<i32, Fail> {
    match cmd {
        Cmd::Expanderize(a) => cmd_expanderize(a, command),
        Cmd::Dynamize(a) => cmd_dynamize(a, command),
        Cmd::Wter(a) => cmd_wter(a, command),
        Cmd::OmvGen(a) => cmd_omv_gen(a, command),
        Cmd::Oracle(a) => cmd_oracle(a),
        Cmd::Verify(a) => cmd_verify(a, command),
        Cmd::Gen(g) => cmd_gen(g).map_err(Fail::from),
    }
}

fn read_file(p: &Path) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
}

fn write_file(p: &Path, contents: &str) -> Result<()> {
    std::fs::write(p, contents).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
}

fn read_graph(p: &Path, report: Option<&mut RunReport>) -> Result<Graph> {
    let text = read_file(p)?;
    if let Some(r) = report {
        r.input(&p.display().to_string(), text.as_bytes());
    }
    io::parse_edge_list(&text)
}

fn rational_arg(name: &str, s: &str) -> std::result::Result<Rational, Fail> {
    parse_rational(s).map_err(|_| Fail::Usage(format!("--{name}: not a rational: {s:?}")))
}

/// Writes the report to `path` or stdout; returns 0 when every check passed.
fn finish(mut report: RunReport, started: Instant, path: Option<&Path>) -> Result<i32> {
    report.timing_ms = started.elapsed().as_millis() as u64;
    let text = report.to_json();
    match path {
        Some(p) => write_file(p, &text)?,
        None => print!("{text}"),
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn gadget_checks(x: &ExpanderizedGraph) -> Vec<Check> {
    let rc = x.check_robust_preconditions();
    let mut checks = vec![
        Check::new("expander_certificate", x.expander.certificate().meets_target, json!(x.expander.certificate())),
        Check::new("robust_preconditions", rc.all(), json!(rc)),
    ];
    if let Some(claim) = x.conductance_claim {
        checks.push(conductance_evidence(&x.graph, claim));
    }
    checks
}

/// Exact conductance against the claim when enumerable, else a positive spectral bound.
fn conductance_evidence(g: &Graph, claim: Rational) -> Check {
    if g.vertex_count() <= EXACT_LIMIT {
        let (phi, cut) = measure::exact_conductance(g).expect("within the exact limit");
        return Check::new(
            "conductance_claim",
            phi >= claim,
            json!({"claim": ratio::fmt(claim), "exact": ratio::fmt(phi), "witness_cut": cut.vertices()}),
        );
    }
    let lb = measure::spectral_conductance_lower_bound(g);
    Check::new("spectral_bound_positive", lb > 0.0, json!({"claim": ratio::fmt(claim), "spectral_lower_bound": lb}))
}

fn cmd_expanderize(a: ExpanderizeArgs, command: &[String]) -> std::result::Result<i32, Fail> {
    let started = Instant::now();
    let mut report = RunReport::new(command);
    let g = read_graph(&a.input, Some(&mut report))?;
    let (eps, delta) = (rational_arg("eps", &a.eps)?, rational_arg("delta", &a.delta)?);
    let params = match a.mode {
        ModeArg::Plain => GadgetParams::plain(),
        ModeArg::Tradeoff => GadgetParams::tradeoff(eps, delta),
        ModeArg::Bipartite => GadgetParams::bipartite(),
    };
    let x = gadget::build_core_gadget(&g, params)?;
    write_file(&a.output, &io::write_edge_list(&x.graph))?;
    report.parameters = json!({"mode": params.mode, "eps": ratio::fmt(params.eps), "delta": ratio::fmt(params.delta)});
    report.result = json!(x.report());
    report.checks = gadget_checks(&x);
    Ok(finish(report, started, a.report.as_deref())?)
}

fn cmd_dynamize(a: DynamizeArgs, command: &[String]) -> std::result::Result<i32, Fail> {
    let started = Instant::now();
    let mut report = RunReport::new(command);
    let g = read_graph(&a.input, Some(&mut report))?;
    let text = read_file(&a.updates)?;
    report.input(&a.updates.display().to_string(), text.as_bytes());
    let updates = io::parse_updates(&text)?;
    let st = DynamicExpanderState::new(&g)?;
    let (st, log, checks) = drive(st, &updates, a.check_every)?;
    write_file(&a.emit, &io::write_event_log(st.gexp().vertex_count(), &log))?;
    if let Some(p) = &a.final_graph {
        write_file(p, &io::write_edge_list(st.gexp()))?;
    }
    report.parameters = json!({
        "check_every": a.check_every,
        "updates": updates.len(),
        "input": a.input.display().to_string(),
        "updates_file": a.updates.display().to_string(),
        "final": a.final_graph.as_ref().map(|p| p.display().to_string()),
    });
    report.result = json!({
        "amortization": st.amortization_report(),
        "counters": st.counters(),
        "N": st.n_side(),
        "d_X": st.d_x(),
        "final_vertices": st.gexp().vertex_count(),
        "final_edges": st.gexp().edge_count(),
    });
    report.checks = checks;
    Ok(finish(report, started, a.report.as_deref())?)
}

/// Applies `updates`, returning the full event log (snapshot first) and the checks.
fn drive(
    mut st: DynamicExpanderState,
    updates: &[EdgeUpdate],
    check_every: usize,
) -> Result<(DynamicExpanderState, Vec<EdgeUpdate>, Vec<Check>)> {
    let n_exp = st.gexp().vertex_count();
    let mut log: Vec<EdgeUpdate> = st.snapshot_events().iter().map(|e| e.edge_update()).collect();
    let mut failures: Vec<String> = Vec::new();
    let mut checked = 0;
    for (i, up) in updates.iter().enumerate() {
        let events = st.apply(up).map_err(|e| Error::InvalidInput(format!("update {} ({up:?}): {e}", i + 1)))?;
        log.extend(events.iter().map(|e| e.edge_update()));
        if check_every > 0 && (i + 1) % check_every == 0 {
            checked += 1;
            if let Err(msg) = st.check_invariants() {
                failures.push(format!("after update {}: {msg}", i + 1));
            }
        }
    }
    let replay_ok = io::replay(n_exp, &log).is_ok_and(|g| &g == st.gexp());
    let amort = st.amortization_report();
    let checks = vec![
        Check::new(
            "invariants",
            failures.is_empty(),
            json!({"checked": checked, "failures": failures.iter().take(10).collect::<Vec<_>>()}),
        ),
        Check::new("replay_sound", replay_ok, json!({"events": log.len()})),
        Check::new("amortization_ratio", !amort.violation, json!({"ratio": amort.ratio, "bound": amort.bound})),
    ];
    Ok((st, log, checks))
}

fn default_eps(a: &WterArgs, fallback: Rational) -> std::result::Result<Rational, Fail> {
    match &a.eps {
        Some(s) => rational_arg("eps", s),
        None => Ok(fallback),
    }
}

fn cmd_wter(a: WterArgs, command: &[String]) -> std::result::Result<i32, Fail> {
    let started = Instant::now();
    let mut report = RunReport::new(command);
    let g = read_graph(&a.input, Some(&mut report))?;
    let mut checks = Vec::new();
    let mut pattern = None;
    let mut final_g: Option<Graph> = None;
    let (out, labels, map, gadget_report): (Graph, Option<Vec<Role>>, SolutionMap, Value) = match a.problem {
        WterProblem::Densest if a.dynamic => {
            let (Some(up_path), Some(emit)) = (&a.updates, &a.emit) else {
                return Err(Fail::Usage("--dynamic needs --updates and --emit".into()));
            };
            let text = read_file(up_path)?;
            report.input(&up_path.display().to_string(), text.as_bytes());
            let updates = io::parse_updates(&text)?;
            let (st, map) = wter::wter_densest_dynamic(&g)?;
            let mut bounds_ok = true;
            let mut st = st;
            let n_exp = st.gexp().vertex_count();
            let mut log: Vec<EdgeUpdate> = st.snapshot_events().iter().map(|e| e.edge_update()).collect();
            for up in &updates {
                log.extend(st.apply(up)?.iter().map(|e| e.edge_update()));
                bounds_ok &= wter::densest_dynamic_bounds(&st).holds();
            }
            write_file(emit, &io::write_event_log(n_exp, &log))?;
            checks.push(Check::new("vl_bounds", bounds_ok, json!({"updates": updates.len()})));
            if let Err(msg) = st.check_invariants() {
                checks.push(Check::new("invariants", false, json!(msg)));
            }
            final_g = Some(st.graph().clone());
            let labels = st.labels().to_vec();
            let r = json!({"amortization": st.amortization_report(), "N": st.n_side(), "d_X": st.d_x()});
            (st.gexp().clone(), Some(labels), map, r)
        }
        WterProblem::MaxCut => simple(wter::wter_max_cut(&g, default_eps(&a, ratio::rat(1, 1))?)?, &mut checks),
        WterProblem::Densest => simple(wter::wter_densest(&g)?, &mut checks),
        WterProblem::Densify => {
            let (gc, map) = wter::wter_densify(&g, a.c)?;
            (gc, None, map, Value::Null)
        }
        WterProblem::Matching => simple(wter::wter_matching(&g)?, &mut checks),
        WterProblem::VertexCover => simple(wter::wter_vertex_cover(&g)?, &mut checks),
        WterProblem::Bpm => {
            let (x, sides, map) = wter::wter_bipartite_perfect_matching(&g, None)?;
            checks.push(Check::new("output_bipartite", x.graph.respects_bipartition(&sides), Value::Null));
            let (out, labels, map, r) = simple((x, map), &mut checks);
            (out, labels, map, r)
        }
        WterProblem::KClique => simple(wter::wter_k_clique(&g, a.k)?, &mut checks),
        WterProblem::HSubgraph => {
            let p = a.pattern.as_ref().ok_or_else(|| Fail::Usage("h-subgraph needs --pattern".into()))?;
            let h = read_graph(p, Some(&mut report))?;
            let (inst, map) = wter::wter_h_subgraph(&g, &h)?;
            let r = json!({"path_len": inst.path_len, "gadget": inst.gadget.report()});
            pattern = Some(h);
            (inst.graph, Some(inst.labels), map, r)
        }
        WterProblem::MaxClique => simple(wter::wter_max_clique(&g, default_eps(&a, ratio::rat(1, 2))?)?, &mut checks),
        WterProblem::DominatingSet => {
            simple(wter::wter_dominating_set(&g, default_eps(&a, ratio::rat(1, 2))?)?, &mut checks)
        }
    };
    if let Some(check) = oracle_map_check(&map, final_g.as_ref().unwrap_or(&g), &out, pattern.as_ref()) {
        checks.push(check);
    }
    write_file(&a.output, &io::write_edge_list(&out))?;
    write_file(&a.map, &format!("{}\n", serde_json::to_string_pretty(&map).expect("map serializes")))?;
    report.parameters = json!({"problem": map.problem, "eps": a.eps, "c": a.c, "k": a.k, "dynamic": a.dynamic});
    report.result = json!({"map": map, "gadget": gadget_report, "labels": labels, "vertices": out.vertex_count(), "edges": out.edge_count()});
    report.checks = checks;
    Ok(finish(report, started, a.report.as_deref())?)
}

fn simple(
    (x, map): (ExpanderizedGraph, SolutionMap),
    checks: &mut Vec<Check>,
) -> (Graph, Option<Vec<Role>>, SolutionMap, Value) {
    checks.extend(gadget_checks(&x));
    let r = json!(x.report());
    (x.graph, Some(x.labels), map, r)
}

/// Verifies the map with exact oracles when both instances fit their budgets.
fn oracle_map_check(map: &SolutionMap, g: &Graph, out: &Graph, pattern: Option<&Graph>) -> Option<Check> {
    let want = verify::answer(map, g, pattern).ok()?;
    let exp = verify::answer(map, out, pattern).ok()?;
    let got = map.recover(exp);
    Some(Check::new(
        "solution_map",
        got == want,
        json!({"input_value": ratio::fmt(want), "output_value": ratio::fmt(exp), "recovered": ratio::fmt(got)}),
    ))
}

fn cmd_omv_gen(a: OmvGenArgs, command: &[String]) -> std::result::Result<i32, Fail> {
    let started = Instant::now();
    let mut report = RunReport::new(command);
    let mtext = read_file(&a.matrix)?;
    report.input(&a.matrix.display().to_string(), mtext.as_bytes());
    let m = io::parse_matrix(&mtext)?;
    let qtext = read_file(&a.queries)?;
    report.input(&a.queries.display().to_string(), qtext.as_bytes());
    let queries = io::parse_queries(&qtext, m.len())?;
    let mut inst = wter::omv_build(&m)?;
    let mut log = inst.initial_events();
    let mut answers = String::new();
    let mut agree = 0;
    for (u, v) in &queries {
        let (ans, events) = inst.query(u, v)?;
        log.extend(events);
        answers.push_str(ans.as_str());
        answers.push('\n');
        if (ans == wter::Answer::Dist3) == inst.product(u, v) {
            agree += 1;
        }
    }
    write_file(&a.emit, &io::write_event_log(inst.graph.vertex_count(), &log))?;
    write_file(&a.answers, &answers)?;
    report.parameters = json!({"k": inst.k, "queries": queries.len()});
    report.result = json!({
        "s": inst.s,
        "t": inst.t,
        "anchor": {"x": inst.gadget.l_vertex(inst.anchor.0), "y": inst.gadget.r_vertex(inst.anchor.1)},
        "conductance_claim": ratio::fmt(inst.conductance_claim),
        "gadget": inst.gadget.report(),
        "vertices": inst.graph.vertex_count(),
        "events": log.len(),
    });
    report.checks = vec![Check::new(
        "answers_match_product",
        agree == queries.len(),
        json!({"agree": agree, "queries": queries.len()}),
    )];
    Ok(finish(report, started, a.report.as_deref())?)
}

fn cmd_oracle(a: OracleArgs) -> std::result::Result<i32, Fail> {
    let g = read_graph(&a.input, None)?;
    let value = match a.problem {
        OracleProblem::MaxCut => oracle::max_cut(&g)?.to_string(),
        OracleProblem::Densest => ratio::fmt(oracle::densest(&g)?.density),
        OracleProblem::Matching => oracle::max_matching(&g)?.to_string(),
        OracleProblem::VertexCover => oracle::min_vertex_cover(&g)?.to_string(),
        OracleProblem::DominatingSet => oracle::min_dominating_set(&g)?.to_string(),
        OracleProblem::MaxClique => oracle::max_clique(&g)?.to_string(),
        OracleProblem::KClique => oracle::count_k_cliques(&g, a.k)?.to_string(),
        OracleProblem::Bpm => {
            let sides = g.two_coloring().ok_or(Error::NotBipartite)?;
            oracle::bipartite_perfect_matching(&g, &sides)?.to_string()
        }
        OracleProblem::Distance => {
            let (Some(s), Some(t)) = (a.s, a.t) else {
                return Err(Fail::Usage("distance needs --s and --t".into()));
            };
            oracle::distance(&g, s, t)?.map_or("inf".to_string(), |d| d.to_string())
        }
        OracleProblem::Conductance => ratio::fmt(measure::exact_conductance(&g)?.0),
        OracleProblem::EdgeExpansion => ratio::fmt(measure::exact_edge_expansion(&g)?.0),
        OracleProblem::HSubgraph => {
            let p = a.pattern.as_ref().ok_or_else(|| Fail::Usage("h-subgraph needs --pattern".into()))?;
            oracle::subgraph_iso(&g, &read_graph(p, None)?)?.to_string()
        }
    };
    println!("{value}");
    Ok(0)
}

fn cmd_verify(a: VerifyArgs, command: &[String]) -> std::result::Result<i32, Fail> {
    let started = Instant::now();
    let mut report = RunReport::new(command);
    let text = read_file(&a.input)?;
    report.input(&a.input.display().to_string(), text.as_bytes());
    let subject = Subject::parse(&text)?;
    let ctext = read_file(&a.claims)?;
    // a report given as claims is hashed without its timing
    report.input(&a.claims.display().to_string(), crate::report::strip_timing(&ctext).as_bytes());
    let claims = verify::parse_claims(&ctext)?;
    let base = a.claims.parent().map(Path::to_path_buf).unwrap_or_default();
    report.checks = verify::check_claims(&subject, &claims, &base)?;
    report.parameters = json!({"claims": claims.len()});
    report.result = json!({"verified": report.all_passed()});
    Ok(finish(report, started, a.report.as_deref())?)
}

fn random_pair(n: usize, rng: &mut ChaCha8Rng) -> (usize, usize) {
    loop {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            return (u.min(v), u.max(v));
        }
    }
}

/// Seeded random graph; `bipartite` restricts edges to the halves split at n/2.
pub fn random_graph(n: usize, m: Option<usize>, p: Option<f64>, bipartite: bool, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let allowed = |u: usize, v: usize| !bipartite || (u < n / 2) != (v < n / 2);
    let mut g = Graph::new(n);
    match (m, p) {
        (Some(m), None) => {
            let cap = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| allowed(u, v)).count();
            if m > cap {
                return Err(Error::InvalidInput(format!("{m} edges do not fit in {cap} pairs")));
            }
            while g.edge_count() < m {
                let (u, v) = random_pair(n, &mut rng);
                if allowed(u, v) && !g.has_edge(u, v) {
                    g.insert_edge(u, v)?;
                }
            }
        }
        (None, Some(p)) if (0.0..=1.0).contains(&p) => {
            for u in 0..n {
                for v in u + 1..n {
                    if allowed(u, v) && rng.gen_bool(p) {
                        g.insert_edge(u, v)?;
                    }
                }
            }
        }
        _ => return Err(Error::InvalidInput("give exactly one of --m or --p (0 ≤ p ≤ 1)".into())),
    }
    Ok(g)
}

/// Seeded toggles of random vertex pairs, consistent with `g` when applied in order.
pub fn random_updates(g: &Graph, count: usize, seed: u64) -> Result<Vec<EdgeUpdate>> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidInput("need at least two vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = g.clone();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (u, v) = random_pair(n, &mut rng);
        let op = if g.has_edge(u, v) { Op::Delete } else { Op::Insert };
        io::apply_updates(&mut g, &[EdgeUpdate { op, u, v }])?;
        out.push(EdgeUpdate { op, u, v });
    }
    Ok(out)
}

fn bits_random(k: usize, density: f64, rng: &mut ChaCha8Rng) -> Vec<bool> {
    (0..k).map(|_| rng.gen_bool(density)).collect()
}

fn cmd_gen(cmd: GenCmd) -> Result<i32> {
    let check_density = |d: f64| {
        if (0.0..=1.0).contains(&d) {
            Ok(())
        } else {
            Err(Error::InvalidInput("density must lie in [0, 1]".into()))
        }
    };
    match cmd {
        GenCmd::Graph { n, m, p, bipartite, seed, output } => {
            write_file(&output, &io::write_edge_list(&random_graph(n, m, p, bipartite, seed)?))?
        }
        GenCmd::Updates { graph, count, seed, output } => {
            let g = read_graph(&graph, None)?;
            write_file(&output, &io::write_updates(&random_updates(&g, count, seed)?))?
        }
        GenCmd::Matrix { k, density, seed, output } => {
            check_density(density)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m: Vec<Vec<bool>> = (0..k).map(|_| bits_random(k, density, &mut rng)).collect();
            write_file(&output, &io::write_matrix(&m))?
        }
        GenCmd::Queries { k, count, density, seed, output } => {
            check_density(density)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut s = String::new();
            for _ in 0..count {
                let u = bits_random(k, density, &mut rng);
                let v = bits_random(k, density, &mut rng);
                s.push_str(&format!("{} {}\n", io::bits(&u), io::bits(&v)));
            }
            write_file(&output, &s)?
        }
    }
    Ok(0)
}
