//! Exact reference solvers. They refuse inputs above their budget instead of
//! approximating, so every value they return is exact.

mod clique;
mod cover;
mod cut;
mod densest;
mod iso;
mod matching;

pub use clique::{count_k_cliques, max_clique, max_clique_enumerate};
pub use cover::{min_dominating_set, min_dominating_set_enumerate, min_vertex_cover, min_vertex_cover_enumerate};
pub use cut::{max_cut, max_cut_optima, max_cut_plain, twin_classes};
pub use densest::{densest, densest_brute_force, Densest};
pub use iso::subgraph_iso;
pub use matching::{bipartite_perfect_matching, hopcroft_karp, max_matching, max_matching_exhaustive};

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleBudget {
    pub kind: &'static str,
    pub max_vertices: usize,
    pub max_edges: usize,
}

/// The one place oracle limits are configured. Max-cut counts vertices of the
/// twin-compressed quotient; subgraph isomorphism counts pattern vertices.
pub const BUDGETS: &[OracleBudget] = &[
    OracleBudget { kind: "max-cut", max_vertices: 24, max_edges: usize::MAX },
    OracleBudget { kind: "densest", max_vertices: 5_000, max_edges: 200_000 },
    OracleBudget { kind: "densest-brute", max_vertices: 20, max_edges: usize::MAX },
    OracleBudget { kind: "matching", max_vertices: 1_000, max_edges: 200_000 },
    OracleBudget { kind: "matching-exhaustive", max_vertices: 16, max_edges: usize::MAX },
    OracleBudget { kind: "bipartite-pm", max_vertices: 100_000, max_edges: 1_000_000 },
    OracleBudget { kind: "k-clique", max_vertices: 4_096, max_edges: 200_000 },
    OracleBudget { kind: "max-clique", max_vertices: 64, max_edges: usize::MAX },
    OracleBudget { kind: "vertex-cover", max_vertices: 64, max_edges: usize::MAX },
    OracleBudget { kind: "dominating-set", max_vertices: 64, max_edges: usize::MAX },
    OracleBudget { kind: "subset-enumeration", max_vertices: 20, max_edges: usize::MAX },
    OracleBudget { kind: "distance", max_vertices: usize::MAX, max_edges: usize::MAX },
    OracleBudget { kind: "subgraph-iso", max_vertices: 8, max_edges: usize::MAX },
];

pub fn budget(kind: &str) -> &'static OracleBudget {
    BUDGETS.iter().find(|b| b.kind == kind).expect("unknown oracle kind")
}

pub(crate) fn check_budget(kind: &'static str, n: usize, m: usize) -> Result<()> {
    let b = budget(kind);
    if n > b.max_vertices {
        return Err(Error::TooLargeForExact { what: kind, n, limit: b.max_vertices });
    }
    if m > b.max_edges {
        return Err(Error::TooLargeForExact { what: kind, n: m, limit: b.max_edges });
    }
    Ok(())
}

/// BFS distance; `None` when t is unreachable.
pub fn distance(g: &Graph, s: usize, t: usize) -> Result<Option<usize>> {
    let n = g.vertex_count();
    if s >= n || t >= n {
        return Err(Error::InvalidIndex(format!("vertex out of range for n = {n}")));
    }
    Ok(g.bfs(s)[t])
}
