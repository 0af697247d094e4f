use super::{Problem, SolutionMap};
use crate::error::{Error, Result};
use crate::gadget::{self, assemble, AuxGroup, ExpanderizedGraph, GadgetParams, Mode, Role, Wiring};
use crate::graph::Graph;
use crate::ratio::rat;

/// k-clique reduction: an independent copy V_ind with u–v_ind for every edge uv,
/// and the core gadget attached to V_ind only. Each k-clique of G appears once as
/// itself and once per member swapped for its copy, so counts scale by k + 1.
pub fn wter_k_clique(g: &Graph, k: usize) -> Result<(ExpanderizedGraph, SolutionMap)> {
    if k < 3 {
        return Err(Error::InvalidInput("k must be at least 3".into()));
    }
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let mut base = g.clone();
    base.add_vertices(n);
    for (u, v) in g.edges() {
        base.insert_edge(u, n + v)?;
        base.insert_edge(v, n + u)?;
    }
    let mut labels = vec![Role::V; n];
    labels.extend(std::iter::repeat_n(Role::Aux, n));
    let to_l = (0..n).map(|v| (n + v, g.degree(v), g.degree(v) + 3)).collect();
    let wiring = Wiring { to_l, to_r: vec![], n_side: gadget::plain_side(n), eps: rat(1, 1), mode: Mode::Plain };
    let mut x = assemble(base, labels, n, g.edge_count(), wiring)?;
    x.aux.push(AuxGroup { name: "V_ind".into(), vertices: (n..2 * n).collect() });
    x.conductance_claim = Some(gadget::plain_claim(x.cert_phi) / 5);
    Ok((x, SolutionMap::factor(Problem::KCliqueCount, k + 1)))
}

/// Plain gadget whose V–L and L–R edges are each replaced by a path.
#[derive(Debug, Clone)]
pub struct HSubgraphInstance {
    pub graph: Graph,
    pub labels: Vec<Role>,
    /// Edges per replaced path, ⌈|V(H)|/2⌉.
    pub path_len: usize,
    /// The gadget before subdivision.
    pub gadget: ExpanderizedGraph,
}

/// H-subgraph detection. Patterns with a vertex of degree below 2 are rejected:
/// they can embed along the subdivision paths.
pub fn wter_h_subgraph(g: &Graph, h: &Graph) -> Result<(HSubgraphInstance, SolutionMap)> {
    if h.vertex_count() == 0 {
        return Err(Error::UnsupportedPattern("empty pattern".into()));
    }
    if let Some(v) = (0..h.vertex_count()).find(|&v| h.degree(v) < 2) {
        return Err(Error::UnsupportedPattern(format!("pattern vertex {v} has degree {}", h.degree(v))));
    }
    let x = gadget::build_core_gadget(g, GadgetParams::plain())?;
    let path_len = h.vertex_count().div_ceil(2);
    let mut graph = Graph::new(x.graph.vertex_count());
    let mut labels = x.labels.clone();
    for (a, b) in x.graph.edges() {
        let subdivide = matches!((x.labels[a], x.labels[b]), (Role::V, Role::L) | (Role::L, Role::R));
        if !subdivide || path_len < 2 {
            graph.insert_edge(a, b)?;
            continue;
        }
        let first = graph.add_vertices(path_len - 1);
        labels.extend(std::iter::repeat_n(Role::Aux, path_len - 1));
        let path: Vec<usize> =
            std::iter::once(a).chain(first..first + path_len - 1).chain(std::iter::once(b)).collect();
        for w in path.windows(2) {
            graph.insert_edge(w[0], w[1])?;
        }
    }
    Ok((HSubgraphInstance { graph, labels, path_len, gadget: x }, SolutionMap::identity(Problem::HSubgraph)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn k4_gives_five_four_cliques() {
        let (x, map) = wter_k_clique(&Graph::complete(4), 4).unwrap();
        let c = oracle::count_k_cliques(&x.graph, 4).unwrap();
        assert_eq!(c, 5);
        assert_eq!(map.recover(rat(c as i64, 1)), rat(1, 1));
    }

    #[test]
    fn isolated_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(wter_k_clique(&g, 3), Err(Error::IsolatedVertex(2))));
    }

    #[test]
    fn c4_patterns() {
        let c4 = Graph::cycle(4);
        let with = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        let (inst, _) = wter_h_subgraph(&with, &c4).unwrap();
        assert_eq!(inst.path_len, 2);
        assert!(oracle::subgraph_iso(&inst.graph, &c4).unwrap());
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let (inst, _) = wter_h_subgraph(&tree, &c4).unwrap();
        assert!(!oracle::subgraph_iso(&inst.graph, &c4).unwrap());
        assert!(matches!(wter_h_subgraph(&tree, &Graph::path(2)), Err(Error::UnsupportedPattern(_))));
    }
}
