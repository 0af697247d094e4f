//! Problem-specific reductions: each builds a gadgeted expander and an exact rule
//! recovering the answer on the input from the answer on the output.

mod clique;
mod cut;
mod densest;
mod hitting;
mod matching;
mod omv;

pub use clique::{wter_h_subgraph, wter_k_clique, HSubgraphInstance};
pub use cut::wter_max_cut;
pub use densest::{densest_dynamic_bounds, wter_densest, wter_densest_dynamic, wter_densify, DensestBounds};
pub use hitting::{build_hitting_set, hitting_cut_violation, hitting_quality, wter_dominating_set, wter_max_clique};
pub use matching::{wter_bipartite_perfect_matching, wter_matching, wter_vertex_cover};
pub use omv::{omv_build, Answer, OmvInstance};

use crate::gadget::ExpanderizedGraph;
use crate::ratio::{self, rat, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    MaxCut,
    Densest,
    Densify,
    Matching,
    VertexCover,
    BipartitePerfectMatching,
    KCliqueCount,
    HSubgraph,
    MaxClique,
    DominatingSet,
    StShortestPath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    AdditiveOffset,
    MultiplicativeFactor,
    Identity,
    /// answer(G) = (answer(G_exp) − shift) · value
    Affine,
}

/// Exact rule taking the answer on the output graph back to the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionMap {
    pub problem: Problem,
    pub kind: MapKind,
    #[serde(with = "ratio::serde_rational")]
    pub value: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "ratio::serde_opt_rational")]
    pub shift: Option<Rational>,
}

impl SolutionMap {
    pub fn offset(problem: Problem, value: usize) -> Self {
        SolutionMap { problem, kind: MapKind::AdditiveOffset, value: rat(value as i64, 1), shift: None }
    }

    pub fn factor(problem: Problem, value: usize) -> Self {
        SolutionMap { problem, kind: MapKind::MultiplicativeFactor, value: rat(value as i64, 1), shift: None }
    }

    pub fn identity(problem: Problem) -> Self {
        SolutionMap { problem, kind: MapKind::Identity, value: rat(1, 1), shift: None }
    }

    pub fn affine(problem: Problem, value: Rational, shift: Rational) -> Self {
        SolutionMap { problem, kind: MapKind::Affine, value, shift: Some(shift) }
    }

    /// The answer on the input graph given the answer on the output graph.
    pub fn recover(&self, exp: Rational) -> Rational {
        match self.kind {
            MapKind::AdditiveOffset => exp - self.value,
            MapKind::MultiplicativeFactor => exp / self.value,
            MapKind::Identity => exp,
            MapKind::Affine => (exp - self.shift.unwrap_or_default()) * self.value,
        }
    }

    /// The answer the output graph must have when the input's answer is `orig`.
    pub fn forward(&self, orig: Rational) -> Rational {
        match self.kind {
            MapKind::AdditiveOffset => orig + self.value,
            MapKind::MultiplicativeFactor => orig * self.value,
            MapKind::Identity => orig,
            MapKind::Affine => orig / self.value + self.shift.unwrap_or_default(),
        }
    }
}

/// Hangs one pendant vertex off each host and records them as aux group `name`.
pub(crate) fn add_pendants(x: &mut ExpanderizedGraph, name: &str, hosts: &[usize]) {
    let ids = x.add_aux(name, hosts.len());
    for (&p, &h) in ids.iter().zip(hosts) {
        x.graph.insert_edge(h, p).expect("fresh pendant");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_round_trip() {
        let maps = [
            SolutionMap::offset(Problem::Matching, 12),
            SolutionMap::factor(Problem::KCliqueCount, 4),
            SolutionMap::identity(Problem::Densest),
            SolutionMap::affine(Problem::Densify, rat(5, 1), rat(2, 1)),
        ];
        for m in maps {
            assert_eq!(m.recover(m.forward(rat(7, 3))), rat(7, 3));
        }
    }

    #[test]
    fn map_json_shape() {
        let m = SolutionMap::offset(Problem::MaxCut, 96);
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"problem":"max-cut","kind":"additive_offset","value":"96"}"#
        );
        let back: SolutionMap =
            serde_json::from_str(r#"{"problem":"max-cut","kind":"additive_offset","value":"96"}"#).unwrap();
        assert_eq!(back, m);
    }
}
