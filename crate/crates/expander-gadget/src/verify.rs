//! Claim checking for `xgadget verify`: each claim is re-established from the
//! graph (or event log) itself, never taken from a report.

use crate::error::{Error, Result};
use crate::expander::{self, phi_target};
use crate::gadget::Role;
use crate::graph::Graph;
use crate::io::{self, EdgeUpdate};
use crate::measure::{self, EXACT_LIMIT};
use crate::oracle;
use crate::ratio::{self, rat, Rational};
use crate::report::Check;
use crate::wter::{Problem, SolutionMap};
use serde::Deserialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

pub const CLAIM_KINDS: &[&str] =
    &["conductance_at_least", "solution_offset", "robust_preconditions", "amortization_ratio_at_most", "replay_sound"];

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Claim {
    ConductanceAtLeast {
        #[serde(with = "ratio::serde_rational")]
        value: Rational,
    },
    /// `map.recover(answer(input)) == answer(original)` by exact oracles.
    SolutionOffset {
        original: String,
        map: SolutionMap,
        #[serde(default)]
        pattern: Option<String>,
    },
    RobustPreconditions {
        labels: Vec<Role>,
        #[serde(with = "ratio::serde_rational")]
        eps: Rational,
        #[serde(default, with = "ratio::serde_opt_rational")]
        alpha: Option<Rational>,
    },
    /// events / (updates + m₀ + n) ≤ value, with the input an event log.
    AmortizationRatioAtMost { value: f64, updates: String, initial: String },
    ReplaySound {
        #[serde(rename = "final")]
        final_graph: String,
    },
}

/// What the claims are checked against.
pub enum Subject {
    Graph(Graph),
    EventLog { n: usize, events: Vec<EdgeUpdate> },
}

impl Subject {
    pub fn parse(text: &str) -> Result<Self> {
        if io::is_event_log(text) {
            let (n, events) = io::parse_event_log(text)?;
            Ok(Subject::EventLog { n, events })
        } else {
            Ok(Subject::Graph(io::parse_edge_list(text)?))
        }
    }

    /// The graph itself, or the result of replaying the log.
    fn graph(&self) -> Result<Graph> {
        match self {
            Subject::Graph(g) => Ok(g.clone()),
            Subject::EventLog { n, events } => io::replay(*n, events),
        }
    }
}

/// Parses `{"claims": [...]}` or derives claims from an expanderize run report
/// (its conductance claim and robust expansion preconditions).
pub fn parse_claims(text: &str) -> Result<Vec<Claim>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    if let Some(list) = v.get("claims").and_then(Value::as_array) {
        return list.iter().map(parse_claim).collect();
    }
    let report = v.get("result").unwrap_or(&v);
    if let (Some(labels), Some(eps)) = (report.get("labels"), report.get("eps")) {
        let mut claims = Vec::new();
        if let Some(c) = report.get("conductance_claim").and_then(Value::as_str) {
            claims.push(Claim::ConductanceAtLeast { value: ratio::parse_rational(c)? });
        }
        let labels: Vec<Role> =
            serde_json::from_value(labels.clone()).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let eps = ratio::parse_rational(eps.as_str().unwrap_or(""))?;
        let alpha = report.get("alpha").and_then(Value::as_str).map(ratio::parse_rational).transpose()?;
        claims.push(Claim::RobustPreconditions { labels, eps, alpha });
        return Ok(claims);
    }
    // dynamize report: paths are the ones it was run with
    let params = v.get("parameters").unwrap_or(&Value::Null);
    let path = |k: &str| params.get(k).and_then(Value::as_str).map(str::to_string);
    if let (Some(initial), Some(updates)) = (path("input"), path("updates_file")) {
        let mut claims = vec![Claim::AmortizationRatioAtMost { value: crate::dynamic::AMORT_BOUND, updates, initial }];
        if let Some(final_graph) = path("final") {
            claims.push(Claim::ReplaySound { final_graph });
        }
        return Ok(claims);
    }
    Err(Error::InvalidInput("expected {\"claims\": [...]}, an expanderize report or a dynamize report".into()))
}

fn parse_claim(v: &Value) -> Result<Claim> {
    let kind = v.get("kind").and_then(Value::as_str).unwrap_or("");
    if !CLAIM_KINDS.contains(&kind) {
        return Err(Error::UnknownClaim(kind.to_string()));
    }
    serde_json::from_value(v.clone()).map_err(|e| Error::InvalidInput(format!("claim {kind}: {e}")))
}

pub fn check_claims(subject: &Subject, claims: &[Claim], base_dir: &Path) -> Result<Vec<Check>> {
    claims.iter().map(|c| check_claim(subject, c, base_dir)).collect()
}

fn resolve(base: &Path, p: &str) -> PathBuf {
    let p = Path::new(p);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

fn read(base: &Path, p: &str) -> Result<String> {
    std::fs::read_to_string(resolve(base, p)).map_err(|e| Error::Io(format!("{p}: {e}")))
}

fn check_claim(subject: &Subject, claim: &Claim, base: &Path) -> Result<Check> {
    match claim {
        Claim::ConductanceAtLeast { value } => conductance_check(&subject.graph()?, *value),
        Claim::SolutionOffset { original, map, pattern } => {
            let g = subject.graph()?;
            let orig = io::parse_edge_list(&read(base, original)?)?;
            let h = pattern.as_deref().map(|p| read(base, p).and_then(|t| io::parse_edge_list(&t))).transpose()?;
            let exp = answer(map, &g, h.as_ref())?;
            let want = answer(map, &orig, h.as_ref())?;
            let got = map.recover(exp);
            Ok(Check::new(
                "solution_offset",
                got == want,
                json!({"problem": map.problem, "output_value": ratio::fmt(exp), "recovered": ratio::fmt(got), "original_value": ratio::fmt(want)}),
            ))
        }
        Claim::RobustPreconditions { labels, eps, alpha } => robust_check(&subject.graph()?, labels, *eps, *alpha),
        Claim::AmortizationRatioAtMost { value, updates, initial } => {
            let Subject::EventLog { events, .. } = subject else {
                return Err(Error::InvalidInput("amortization_ratio_at_most needs an event log".into()));
            };
            let ups = io::parse_updates(&read(base, updates)?)?;
            let g0 = io::parse_edge_list(&read(base, initial)?)?;
            let credit = ups.len() + g0.edge_count() + g0.vertex_count();
            let ratio = events.len() as f64 / credit.max(1) as f64;
            Ok(Check::new(
                "amortization_ratio_at_most",
                ratio <= *value,
                json!({"events_out": events.len(), "updates_in": ups.len(), "m0": g0.edge_count(), "n": g0.vertex_count(), "ratio": ratio, "bound": value}),
            ))
        }
        Claim::ReplaySound { final_graph } => {
            let Subject::EventLog { n, events } = subject else {
                return Err(Error::InvalidInput("replay_sound needs an event log".into()));
            };
            let want = io::parse_edge_list(&read(base, final_graph)?)?;
            let (passed, evidence) = match io::replay(*n, events) {
                Ok(g) if g == want => (true, json!({"events": events.len(), "edges": g.edge_count()})),
                Ok(g) => {
                    let missing = want.edges().filter(|&(u, v)| !g.has_edge(u, v)).count();
                    let extra = g.edges().filter(|&(u, v)| !want.has_edge(u, v)).count();
                    (
                        false,
                        json!({"mismatch": {"missing_edges": missing, "extra_edges": extra, "vertices": [g.vertex_count(), want.vertex_count()]}}),
                    )
                }
                Err(e) => (false, json!({"replay_error": e.to_string()})),
            };
            Ok(Check::new("replay_sound", passed, evidence))
        }
    }
}

fn conductance_check(g: &Graph, value: Rational) -> Result<Check> {
    let name = format!("conductance_at_least {}", ratio::fmt(value));
    if g.vertex_count() <= EXACT_LIMIT {
        let (phi, cut) = measure::exact_conductance(g)?;
        return Ok(Check::new(
            name,
            phi >= value,
            json!({"method": "exact", "conductance": ratio::fmt(phi), "witness_cut": cut.vertices()}),
        ));
    }
    let lb = measure::spectral_conductance_lower_bound(g);
    // only a lower bound: a shortfall is "not verified", not a refutation
    Ok(Check::new(
        name,
        ratio::floor_rational(lb, measure::SPECTRAL_DEN) >= value,
        json!({"method": "spectral", "lower_bound": lb}),
    ))
}

/// Exact answer for the map's problem, as a rational.
pub(crate) fn answer(map: &SolutionMap, g: &Graph, pattern: Option<&Graph>) -> Result<Rational> {
    let int = |x: usize| rat(x as i64, 1);
    Ok(match map.problem {
        Problem::MaxCut => int(oracle::max_cut(g)? as usize),
        Problem::Densest | Problem::Densify => oracle::densest(g)?.density,
        Problem::Matching => int(oracle::max_matching(g)?),
        Problem::VertexCover => int(oracle::min_vertex_cover(g)?),
        Problem::BipartitePerfectMatching => {
            let sides = g.two_coloring().ok_or(Error::NotBipartite)?;
            int(oracle::bipartite_perfect_matching(g, &sides)? as usize)
        }
        Problem::KCliqueCount => {
            let k = (*map.value.numer() - 1) as usize;
            int(oracle::count_k_cliques(g, k)? as usize)
        }
        Problem::HSubgraph => {
            let h = pattern.ok_or_else(|| Error::InvalidInput("h-subgraph claims need a pattern".into()))?;
            int(oracle::subgraph_iso(g, h)? as usize)
        }
        Problem::MaxClique => int(oracle::max_clique(g)?),
        Problem::DominatingSet => int(oracle::min_dominating_set(g)?),
        Problem::StShortestPath => {
            return Err(Error::InvalidInput("st-shortest-path maps are checked per query".into()))
        }
    })
}

/// Robust expansion conditions read off a labelled graph: every vertex touching L∪R has
/// at least ε·(outside degree) + 1 neighbours there; the L–R edges form a d-regular
/// certified expander; L (and R when used) degrees lie in [d, α·d] (α defaults to 4).
pub fn robust_check(g: &Graph, labels: &[Role], eps: Rational, alpha: Option<Rational>) -> Result<Check> {
    if labels.len() != g.vertex_count() {
        return Err(Error::InvalidInput("label count differs from vertex count".into()));
    }
    let is_lr = |v: usize| matches!(labels[v], Role::L | Role::R);
    let l: Vec<usize> = (0..labels.len()).filter(|&v| labels[v] == Role::L).collect();
    let r: Vec<usize> = (0..labels.len()).filter(|&v| labels[v] == Role::R).collect();
    let n = l.len();
    let mut r_index = vec![usize::MAX; labels.len()];
    for (i, &y) in r.iter().enumerate() {
        r_index[y] = i;
    }
    let rows: Vec<Vec<usize>> =
        l.iter().map(|&x| g.neighbors(x).filter(|&w| labels[w] == Role::R).map(|w| r_index[w]).collect()).collect();
    let d = rows.first().map_or(0, Vec::len);
    let regular = n == r.len()
        && n >= 4
        && d >= 3
        && rows.iter().all(|row| row.len() == d)
        && r.iter().all(|&y| g.neighbors(y).filter(|&w| labels[w] == Role::L).count() == d);
    let cert = regular.then(|| expander::certify_rows(n, &rows, phi_target()));
    let expander_ok = cert.as_ref().is_some_and(|c| c.meets_target);

    let mut attach_ok = true;
    let mut uses_r = false;
    for v in (0..labels.len()).filter(|&v| !is_lr(v)) {
        let inside = g.neighbors(v).filter(|&w| is_lr(w)).count();
        if inside == 0 {
            continue;
        }
        uses_r |= g.neighbors(v).any(|w| labels[w] == Role::R);
        let outside = g.degree(v) - inside;
        if rat(inside as i64, 1) < eps * outside as i64 + 1 {
            attach_ok = false;
        }
    }
    let alpha = alpha.unwrap_or(rat(4, 1));
    let sides: Vec<usize> = if uses_r { l.iter().chain(&r).copied().collect() } else { l.clone() };
    let degrees_ok = regular
        && sides.iter().all(|&x| {
            let deg = g.degree(x);
            deg >= d && rat(deg as i64, 1) <= alpha * d as i64
        });
    Ok(Check::new(
        "robust_preconditions",
        attach_ok && expander_ok && degrees_ok,
        json!({
            "attachments": attach_ok,
            "expander": expander_ok,
            "side_degrees": degrees_ok,
            "N": n,
            "d_X": d,
            "certificate": cert,
        }),
    ))
}
