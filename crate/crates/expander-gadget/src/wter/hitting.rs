use super::{add_pendants, Problem, SolutionMap};
use crate::error::{Error, Result};
use crate::gadget::{self, assemble, AuxGroup, ExpanderizedGraph, Mode, Role, Wiring};
use crate::graph::{Cut, Graph};
use crate::oracle;
use crate::ratio::{self, rat, Rational};

fn check_eps(eps: Rational) -> Result<()> {
    if eps <= rat(0, 1) || eps >= rat(1, 1) {
        return Err(Error::InvalidInput("eps must lie in (0, 1)".into()));
    }
    Ok(())
}

/// Vertices whose neighbourhood must be hit: deg(v) > ln(1/ε)/ε.
fn qualifying(g: &Graph, eps: Rational) -> Vec<usize> {
    let e = ratio::to_f64(eps);
    let threshold = (1.0 / e).ln() / e;
    (0..g.vertex_count()).filter(|&v| g.degree(v) as f64 > threshold).collect()
}

/// |N(v) ∩ Q| ≥ ε·deg(v), compared exactly.
fn hit(g: &Graph, v: usize, in_q: &[bool], eps: Rational) -> bool {
    let hits = g.neighbors(v).filter(|&w| in_q[w]).count() as i64;
    hits * eps.denom() >= eps.numer() * g.degree(v) as i64
}

fn satisfied(g: &Graph, need: &[usize], in_q: &[bool], eps: Rational) -> bool {
    need.iter().all(|&v| hit(g, v, in_q, eps))
}

/// A set of ⌈εn⌉ vertices hitting an ε-fraction of every high-degree neighbourhood.
///
/// Greedy first (take the vertex lying in the most still-deficient neighbourhoods,
/// ties to the lower id, then pad with the lowest free ids); when that fails and
/// n ≤ 20, every subset of the right size is tried in lexicographic order.
pub fn build_hitting_set(g: &Graph, eps: Rational) -> Result<Vec<usize>> {
    check_eps(eps)?;
    let n = g.vertex_count();
    let size = ratio::ceil_mul(eps, n).min(n);
    let need = qualifying(g, eps);
    let mut in_q = vec![false; n];
    let mut taken = 0;
    while taken < size {
        let deficient: Vec<usize> = need.iter().copied().filter(|&v| !hit(g, v, &in_q, eps)).collect();
        let mut score = vec![0usize; n];
        for &v in &deficient {
            for w in g.neighbors(v) {
                score[w] += 1;
            }
        }
        let best = (0..n).filter(|&u| !in_q[u]).max_by_key(|&u| (score[u], std::cmp::Reverse(u)));
        match best {
            Some(u) if score[u] > 0 => {
                in_q[u] = true;
                taken += 1;
            }
            _ => break,
        }
    }
    for slot in in_q.iter_mut() {
        if taken == size {
            break;
        }
        if !*slot {
            *slot = true;
            taken += 1;
        }
    }
    if satisfied(g, &need, &in_q, eps) {
        return Ok((0..n).filter(|&v| in_q[v]).collect());
    }
    if n <= oracle::budget("subset-enumeration").max_vertices {
        // Gosper's hack walks the size-`size` subsets in increasing order
        let mut s: u64 = (1u64 << size) - 1;
        while s < 1u64 << n {
            let in_q: Vec<bool> = (0..n).map(|v| s >> v & 1 == 1).collect();
            if satisfied(g, &need, &in_q, eps) {
                return Ok((0..n).filter(|&v| in_q[v]).collect());
            }
            if s == 0 {
                break;
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    Err(Error::HittingSetFailed { size })
}

/// f(ε) = ε² / (10 ln(1/ε)).
pub fn hitting_quality(eps: Rational) -> f64 {
    let e = ratio::to_f64(eps);
    e * e / (10.0 * (1.0 / e).ln())
}

/// Exhaustive check of the cut condition: every S with vol(S) ≤ vol(V∖S) has
/// vol(S∩Q) ≥ f(ε)·vol(S) or e(S, V∖S) > f(ε)·vol(S). Returns a violating cut if any.
pub fn hitting_cut_violation(g: &Graph, q: &[usize], eps: Rational) -> Result<Option<Cut>> {
    let n = g.vertex_count();
    let b = oracle::budget("subset-enumeration");
    if n > b.max_vertices {
        return Err(Error::TooLargeForExact { what: "hitting-cut", n, limit: b.max_vertices });
    }
    let f = hitting_quality(eps);
    let adj = g.bitmasks();
    let qmask = q.iter().fold(0u64, |m, &v| m | 1 << v);
    let total: usize = (0..n).map(|v| g.degree(v)).sum();
    for s in 1u64..(1u64 << n) {
        let mut vol = 0;
        let mut vol_q = 0;
        let mut boundary = 0;
        for v in (0..n).filter(|&v| s >> v & 1 == 1) {
            vol += g.degree(v);
            if qmask >> v & 1 == 1 {
                vol_q += g.degree(v);
            }
            boundary += (adj[v] & !s).count_ones() as usize;
        }
        if vol == 0 || 2 * vol > total {
            continue;
        }
        let v = vol as f64;
        if (vol_q as f64) < f * v && boundary as f64 <= f * v {
            return Ok(Some(Cut::from_mask(s, n)));
        }
    }
    Ok(None)
}

/// Q_ind mirrors adjacency (v–u_ind for v ∈ N(u), u ∈ Q) and carries the tradeoff gadget.
fn q_ind_gadget(g: &Graph, eps: Rational) -> Result<ExpanderizedGraph> {
    check_eps(eps)?;
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let q = build_hitting_set(g, eps)?;
    let mut base = g.clone();
    let first = base.add_vertices(q.len());
    for (i, &u) in q.iter().enumerate() {
        for v in g.neighbors(u) {
            base.insert_edge(v, first + i)?;
        }
    }
    let mut labels = vec![Role::V; n];
    labels.extend(std::iter::repeat_n(Role::Aux, q.len()));
    let to_l: Vec<(usize, usize, usize)> =
        q.iter().enumerate().map(|(i, &u)| (first + i, g.degree(u), gadget::quota(eps, g.degree(u)))).collect();
    let max_q = to_l.iter().map(|a| a.2).max().unwrap_or(3);
    let n_side = gadget::feasible_side(ratio::ceil_mul(eps, n) + 2, max_q);
    let wiring = Wiring { to_l, to_r: vec![], n_side, eps, mode: Mode::Tradeoff };
    let mut x = assemble(base, labels, n, g.edge_count(), wiring)?;
    x.aux.push(AuxGroup { name: "Q_ind".into(), vertices: (first..first + q.len()).collect() });
    Ok(x)
}

pub fn wter_max_clique(g: &Graph, eps: Rational) -> Result<(ExpanderizedGraph, SolutionMap)> {
    Ok((q_ind_gadget(g, eps)?, SolutionMap::identity(Problem::MaxClique)))
}

/// As [`wter_max_clique`] plus a pendant on every L vertex; the optimum grows by N.
pub fn wter_dominating_set(g: &Graph, eps: Rational) -> Result<(ExpanderizedGraph, SolutionMap)> {
    let mut x = q_ind_gadget(g, eps)?;
    let hosts: Vec<usize> = x.l_vertices().collect();
    add_pendants(&mut x, "pendants", &hosts);
    let map = SolutionMap::offset(Problem::DominatingSet, x.n_side);
    Ok((x, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k6_half_has_no_hitting_set() {
        // a vertex inside Q sees only 2 < 5/2 other members
        assert!(matches!(build_hitting_set(&Graph::complete(6), rat(1, 2)), Err(Error::HittingSetFailed { size: 3 })));
    }

    #[test]
    fn low_degree_graph_is_vacuous() {
        // threshold ln(4)·4 ≈ 5.5 exceeds every degree
        let g = Graph::cycle(8);
        assert_eq!(build_hitting_set(&g, rat(1, 4)).unwrap(), vec![0, 1]);
    }

    #[test]
    fn star_hub_is_hit() {
        let edges: Vec<(usize, usize)> = (1..16).map(|v| (0, v)).collect();
        let g = Graph::from_edges(16, &edges).unwrap();
        let q = build_hitting_set(&g, rat(1, 4)).unwrap();
        assert_eq!(q.len(), 4);
        assert!(q.iter().filter(|&&v| v != 0).count() * 4 >= 15);
    }

    #[test]
    fn k5_clique_preserved() {
        let (x, _) = wter_max_clique(&Graph::complete(5), rat(1, 2)).unwrap();
        assert_eq!(oracle::max_clique(&x.graph).unwrap(), 5);
    }
}
