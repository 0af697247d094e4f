//! Static gadgets: plain, tradeoff (robust), and bipartiteness-preserving.

use crate::error::{Error, Result};
use crate::expander::{self, BipartiteExpander};
use crate::graph::Graph;
use crate::measure::Certificate;
use crate::ratio::{self, rat, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    V,
    L,
    R,
    #[serde(rename = "aux")]
    Aux,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Plain,
    Tradeoff,
    Bipartite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetParams {
    pub eps: Rational,
    pub delta: Rational,
    pub mode: Mode,
}

impl GadgetParams {
    pub fn plain() -> Self {
        GadgetParams { eps: rat(1, 1), delta: rat(1, 1), mode: Mode::Plain }
    }

    pub fn tradeoff(eps: Rational, delta: Rational) -> Self {
        GadgetParams { eps, delta, mode: Mode::Tradeoff }
    }

    pub fn bipartite() -> Self {
        GadgetParams { eps: rat(1, 1), delta: rat(1, 1), mode: Mode::Bipartite }
    }

    pub fn validate(&self) -> Result<()> {
        let zero = rat(0, 1);
        let one = rat(1, 1);
        if !(self.eps > zero && self.eps <= self.delta && self.delta <= one) {
            return Err(Error::InvalidInput(format!(
                "need 0 < eps ≤ delta ≤ 1, got eps={}, delta={}",
                ratio::fmt(self.eps),
                ratio::fmt(self.delta)
            )));
        }
        if self.mode != Mode::Tradeoff && (self.eps != one || self.delta != one) {
            return Err(Error::InvalidInput("plain and bipartite modes force eps = delta = 1".into()));
        }
        Ok(())
    }
}

/// A vertex wired into the gadget: its degree outside the gadget and its gadget neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub vertex: usize,
    pub base_degree: usize,
    /// `true` when the targets are in R (bipartite B-side and the Max-Cut mirror).
    pub to_r: bool,
    pub targets: Vec<usize>,
}

/// Named block of auxiliary vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxGroup {
    pub name: String,
    pub vertices: Vec<usize>,
}

/// G_exp together with the partition labels and the parameters the guarantees depend on.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpanderizedGraph {
    pub graph: Graph,
    pub labels: Vec<Role>,
    pub mode: Mode,
    pub eps: Rational,
    pub n_original: usize,
    pub m_original: usize,
    pub n_side: usize,
    /// Id of L vertex 0; L is `l_offset..l_offset+N`, R follows immediately.
    pub l_offset: usize,
    pub expander: BipartiteExpander,
    pub cert_phi: Rational,
    pub alpha: Rational,
    pub conductance_claim: Option<Rational>,
    pub attachments: Vec<Attachment>,
    pub aux: Vec<AuxGroup>,
}

impl ExpanderizedGraph {
    pub fn expander_degree(&self) -> usize {
        self.expander.degree()
    }

    pub fn l_vertex(&self, i: usize) -> usize {
        self.l_offset + i
    }

    pub fn r_vertex(&self, i: usize) -> usize {
        self.l_offset + self.n_side + i
    }

    pub fn l_vertices(&self) -> std::ops::Range<usize> {
        self.l_offset..self.l_offset + self.n_side
    }

    pub fn r_vertices(&self) -> std::ops::Range<usize> {
        self.l_offset + self.n_side..self.l_offset + 2 * self.n_side
    }

    pub fn blowup_vertices(&self) -> usize {
        self.graph.vertex_count() - self.n_original
    }

    pub fn blowup_edges(&self) -> usize {
        self.graph.edge_count() - self.m_original
    }

    pub fn aux_group(&self, name: &str) -> Option<&[usize]> {
        self.aux.iter().find(|g| g.name == name).map(|g| g.vertices.as_slice())
    }

    /// The subgraph induced on V-labelled vertices (ids preserved since V comes first).
    pub fn original_subgraph(&self) -> Graph {
        let v: Vec<usize> = (0..self.labels.len()).filter(|&i| self.labels[i] == Role::V).collect();
        self.graph.induced(&v)
    }

    /// Appends a block of auxiliary vertices and returns their ids.
    pub fn add_aux(&mut self, name: &str, k: usize) -> Vec<usize> {
        let first = self.graph.add_vertices(k);
        self.labels.extend(std::iter::repeat_n(Role::Aux, k));
        let vertices: Vec<usize> = (first..first + k).collect();
        self.aux.push(AuxGroup { name: name.to_string(), vertices: vertices.clone() });
        vertices
    }

    /// Robust expansion conditions, evaluated on the current graph.
    pub fn check_robust_preconditions(&self) -> RobustCheck {
        let d = self.expander.degree();
        // the rational rhs means `>= r + 1` is not `> r`
        #[allow(clippy::int_plus_one)]
        let attach_ok = self.attachments.iter().all(|a| {
            let side = if a.to_r { self.r_vertices() } else { self.l_vertices() };
            let count = self.graph.neighbors(a.vertex).filter(|w| side.contains(w)).count();
            // count ≥ eps·base + 1
            rat(count as i64, 1) >= self.eps * a.base_degree as i64 + 1
        });
        let x_ok = self.cert_phi > rat(0, 1)
            && self.expander.certificate().meets_target
            && self.expander.edges().iter().all(|&(x, y)| self.graph.has_edge(self.l_vertex(x), self.r_vertex(y)));
        let sides: Vec<usize> = if self.mode == Mode::Bipartite || self.attachments.iter().any(|a| a.to_r) {
            self.l_vertices().chain(self.r_vertices()).collect()
        } else {
            self.l_vertices().collect()
        };
        let degrees_ok = sides.iter().all(|&x| {
            let deg = self.gadget_degree(x);
            deg >= d && rat(deg as i64, 1) <= self.alpha * d as i64
        });
        RobustCheck { attachments: attach_ok, expander: x_ok, l_degrees: degrees_ok }
    }

    /// Degree of an L/R vertex counting only V-side attachments and X edges.
    fn gadget_degree(&self, x: usize) -> usize {
        let lr = self.l_offset..self.l_offset + 2 * self.n_side;
        let attached: std::collections::BTreeSet<usize> = self.attachments.iter().map(|a| a.vertex).collect();
        self.graph.neighbors(x).filter(|w| lr.contains(w) || attached.contains(w)).count()
    }

    pub fn report(&self) -> GadgetReport {
        GadgetReport {
            mode: self.mode,
            eps: self.eps,
            n_side: self.n_side,
            d_x: self.expander.degree(),
            phi_x: self.cert_phi,
            alpha: self.alpha,
            conductance_claim: self.conductance_claim,
            blowup_vertices: self.blowup_vertices(),
            blowup_edges: self.blowup_edges(),
            n_original: self.n_original,
            m_original: self.m_original,
            labels: self.labels.clone(),
            certificate: self.expander.certificate().clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RobustCheck {
    pub attachments: bool,
    pub expander: bool,
    pub l_degrees: bool,
}

impl RobustCheck {
    pub fn all(&self) -> bool {
        self.attachments && self.expander && self.l_degrees
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GadgetReport {
    pub mode: Mode,
    #[serde(with = "ratio::serde_rational")]
    pub eps: Rational,
    #[serde(rename = "N")]
    pub n_side: usize,
    #[serde(rename = "d_X")]
    pub d_x: usize,
    #[serde(rename = "phi_X", with = "ratio::serde_rational")]
    pub phi_x: Rational,
    #[serde(with = "ratio::serde_rational")]
    pub alpha: Rational,
    #[serde(with = "ratio::serde_opt_rational")]
    pub conductance_claim: Option<Rational>,
    pub blowup_vertices: usize,
    pub blowup_edges: usize,
    pub n_original: usize,
    pub m_original: usize,
    pub labels: Vec<Role>,
    pub certificate: Certificate,
}

/// Assigns each vertex `quotas[i]` consecutive slots of `0..n_side` in one circular pass.
pub fn round_robin(quotas: &[usize], n_side: usize) -> Result<Vec<Vec<usize>>> {
    if let Some(&q) = quotas.iter().find(|&&q| q > n_side) {
        return Err(Error::AllocationInfeasible { quota: q, n: n_side });
    }
    let mut cursor = 0;
    Ok(quotas
        .iter()
        .map(|&q| {
            (0..q)
                .map(|_| {
                    let s = cursor;
                    cursor = (cursor + 1) % n_side;
                    s
                })
                .collect()
        })
        .collect())
}

/// `(v, L-index)` pairs giving each v ⌈eps·deg(v)⌉ + 3 slots.
pub fn round_robin_allocate(g: &Graph, n_side: usize, eps: Rational) -> Result<Vec<(usize, usize)>> {
    let quotas: Vec<usize> = (0..g.vertex_count()).map(|v| quota(eps, g.degree(v))).collect();
    let slots = round_robin(&quotas, n_side)?;
    Ok(slots.into_iter().enumerate().flat_map(|(v, s)| s.into_iter().map(move |x| (v, x))).collect())
}

pub fn quota(eps: Rational, deg: usize) -> usize {
    ratio::ceil_mul(eps, deg) + 3
}

/// Core-gadget conductance claim min(φ/10, 1/5).
pub fn plain_claim(phi: Rational) -> Rational {
    (phi / 10).min(rat(1, 5))
}

/// Inputs for [`assemble`]: vertices of `base` wired into L (and optionally R).
pub(crate) struct Wiring {
    /// `(vertex, base_degree, quota)` attached to L.
    pub to_l: Vec<(usize, usize, usize)>,
    /// `(vertex, base_degree, quota)` attached to R.
    pub to_r: Vec<(usize, usize, usize)>,
    pub n_side: usize,
    pub eps: Rational,
    pub mode: Mode,
}

/// Appends L, R and X to `base` and wires the attachments by Round-Robin.
pub(crate) fn assemble(
    base: Graph,
    labels: Vec<Role>,
    n_original: usize,
    m_original: usize,
    w: Wiring,
) -> Result<ExpanderizedGraph> {
    let n_side = w.n_side;
    let quotas_l: Vec<usize> = w.to_l.iter().map(|a| a.2).collect();
    let quotas_r: Vec<usize> = w.to_r.iter().map(|a| a.2).collect();
    let slots_l = round_robin(&quotas_l, n_side)?;
    let slots_r = round_robin(&quotas_r, n_side)?;
    let load = quotas_l.iter().sum::<usize>().max(quotas_r.iter().sum());
    let d = load.div_ceil(n_side).clamp(3, n_side);
    let x = expander::build_at_least(n_side, d)?;
    let mut graph = base;
    let mut labels = labels;
    let l_offset = graph.add_vertices(2 * n_side);
    labels.extend(std::iter::repeat_n(Role::L, n_side));
    labels.extend(std::iter::repeat_n(Role::R, n_side));
    let mut attachments = Vec::with_capacity(w.to_l.len() + w.to_r.len());
    for (list, slots, offset, to_r) in
        [(&w.to_l, &slots_l, l_offset, false), (&w.to_r, &slots_r, l_offset + n_side, true)]
    {
        for (&(v, base_degree, _), s) in list.iter().zip(slots) {
            let targets: Vec<usize> = s.iter().map(|&i| offset + i).collect();
            for &t in &targets {
                graph.insert_edge(v, t)?;
            }
            attachments.push(Attachment { vertex: v, base_degree, to_r, targets });
        }
    }
    for (a, b) in x.edges() {
        graph.insert_edge(l_offset + a, l_offset + n_side + b)?;
    }
    let dx = x.degree();
    let max_side_degree = (l_offset..l_offset + n_side)
        .chain(if w.to_r.is_empty() { 0..0 } else { l_offset + n_side..l_offset + 2 * n_side })
        .map(|v| graph.degree(v))
        .max()
        .unwrap_or(dx);
    let alpha = rat(max_side_degree as i64, dx as i64);
    let cert_phi = x.phi();
    Ok(ExpanderizedGraph {
        graph,
        labels,
        mode: w.mode,
        eps: w.eps,
        n_original,
        m_original,
        n_side,
        l_offset,
        expander: x,
        cert_phi,
        alpha,
        conductance_claim: None,
        attachments,
        aux: Vec::new(),
    })
}

/// Dispatches on `params.mode`; bipartite mode 2-colours `g` first.
pub fn build_core_gadget(g: &Graph, params: GadgetParams) -> Result<ExpanderizedGraph> {
    params.validate()?;
    match params.mode {
        Mode::Plain => build_plain(g),
        Mode::Tradeoff => build_tradeoff_gadget(g, params.eps, params.delta),
        Mode::Bipartite => {
            let sides = g.two_coloring().ok_or(Error::NotBipartite)?;
            build_bipartite_core_gadget(g, &sides)
        }
    }
}

/// Plain side size N = n + 2 (at least the expander minimum of 4).
pub fn plain_side(n: usize) -> usize {
    (n + 2).max(4)
}

fn build_plain(g: &Graph) -> Result<ExpanderizedGraph> {
    let n = g.vertex_count();
    let to_l = (0..n).map(|v| (v, g.degree(v), g.degree(v) + 3)).collect();
    let wiring = Wiring { to_l, to_r: vec![], n_side: plain_side(n), eps: rat(1, 1), mode: Mode::Plain };
    let mut out = assemble(g.clone(), vec![Role::V; n], n, g.edge_count(), wiring)?;
    out.conductance_claim = Some(plain_claim(out.cert_phi));
    Ok(out)
}

/// Side size max(formula, largest quota, 4).
pub fn feasible_side(formula: usize, max_quota: usize) -> usize {
    formula.max(max_quota).max(4)
}

pub fn build_tradeoff_gadget(g: &Graph, eps: Rational, delta: Rational) -> Result<ExpanderizedGraph> {
    GadgetParams::tradeoff(eps, delta).validate()?;
    let n = g.vertex_count();
    let to_l: Vec<(usize, usize, usize)> = (0..n).map(|v| (v, g.degree(v), quota(eps, g.degree(v)))).collect();
    let max_q = to_l.iter().map(|a| a.2).max().unwrap_or(3);
    let n_side = feasible_side(ratio::ceil_mul(delta, n) + 2, max_q);
    let wiring = Wiring { to_l, to_r: vec![], n_side, eps, mode: Mode::Tradeoff };
    let mut out = assemble(g.clone(), vec![Role::V; n], n, g.edge_count(), wiring)?;
    out.conductance_claim = Some(tradeoff_claim(&out));
    Ok(out)
}

/// Robust-expansion claim φ·ε/(5α).
pub fn tradeoff_claim(x: &ExpanderizedGraph) -> Rational {
    x.cert_phi * x.eps / (x.alpha * 5)
}

/// `sides[v] == false` marks A, `true` marks B.
pub fn build_bipartite_core_gadget(g: &Graph, sides: &[bool]) -> Result<ExpanderizedGraph> {
    let n = g.vertex_count();
    if sides.len() != n {
        return Err(Error::InvalidInput("side vector length differs from vertex count".into()));
    }
    if !g.respects_bipartition(sides) {
        return Err(Error::NotBipartite);
    }
    let a_count = sides.iter().filter(|&&b| !b).count();
    let n_side = (a_count.max(n - a_count) + 3).max(4);
    let entry = |v: usize| (v, g.degree(v), g.degree(v) + 3);
    let to_l = (0..n).filter(|&v| !sides[v]).map(entry).collect();
    let to_r = (0..n).filter(|&v| sides[v]).map(entry).collect();
    let wiring = Wiring { to_l, to_r, n_side, eps: rat(1, 1), mode: Mode::Bipartite };
    let mut out = assemble(g.clone(), vec![Role::V; n], n, g.edge_count(), wiring)?;
    out.conductance_claim = Some(plain_claim(out.cert_phi));
    Ok(out)
}

/// Output 2-colouring of a bipartite gadget: `true` on B ∪ L, `false` on A ∪ R.
pub fn bipartite_sides(x: &ExpanderizedGraph, input_sides: &[bool]) -> Vec<bool> {
    let mut s = vec![false; x.graph.vertex_count()];
    s[..input_sides.len()].copy_from_slice(input_sides);
    for v in x.l_vertices() {
        s[v] = true;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_robin_two_isolated() {
        let g = Graph::new(2);
        let e = round_robin_allocate(&g, 4, rat(1, 1)).unwrap();
        assert_eq!(e, vec![(0, 0), (0, 1), (0, 2), (1, 3), (1, 0), (1, 1)]);
        let mut deg = [0; 4];
        for (_, x) in e {
            deg[x] += 1;
        }
        assert_eq!(deg, [2, 2, 1, 1]);
    }

    #[test]
    fn round_robin_infeasible() {
        let g = Graph::complete(5);
        assert_eq!(round_robin_allocate(&g, 6, rat(1, 1)), Err(Error::AllocationInfeasible { quota: 7, n: 6 }));
        assert!(round_robin_allocate(&g, 7, rat(1, 1)).is_ok());
    }

    #[test]
    fn path_p4_degree() {
        let x = build_core_gadget(&Graph::path(4), GadgetParams::plain()).unwrap();
        assert_eq!(x.n_side, 6);
        assert_eq!(x.expander_degree(), 3);
        assert_eq!(x.blowup_vertices(), 12);
    }

    #[test]
    fn plain_embeds_input() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let x = build_core_gadget(&g, GadgetParams::plain()).unwrap();
        assert_eq!(x.original_subgraph(), g);
        assert!(x.check_robust_preconditions().all());
        assert!(x.graph.max_degree() <= 2 * g.max_degree() + 3);
        let vl: usize = x.attachments.iter().map(|a| a.targets.len()).sum();
        assert_eq!(vl, 2 * g.edge_count() + 3 * g.vertex_count());
    }

    #[test]
    fn tradeoff_side_size() {
        let g = Graph::cycle(40);
        let x = build_tradeoff_gadget(&g, rat(1, 4), rat(1, 2)).unwrap();
        assert_eq!(x.n_side, 22);
        assert_eq!(x.blowup_vertices(), 44);
        assert!(build_tradeoff_gadget(&g, rat(1, 2), rat(1, 4)).is_err());
    }

    #[test]
    fn tradeoff_degenerates_to_plain() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
        let a = build_core_gadget(&g, GadgetParams::plain()).unwrap();
        let b = build_tradeoff_gadget(&g, rat(1, 1), rat(1, 1)).unwrap();
        assert_eq!(a.graph, b.graph);
    }

    #[test]
    fn bipartite_mode() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let x = build_core_gadget(&g, GadgetParams::bipartite()).unwrap();
        let sides = bipartite_sides(&x, &[false, true]);
        assert!(x.graph.respects_bipartition(&sides));
        assert!(x.graph.two_coloring().is_some());
        assert!(x.check_robust_preconditions().all());
        assert_eq!(build_core_gadget(&Graph::cycle(5), GadgetParams::bipartite()), Err(Error::NotBipartite));
    }

    #[test]
    fn params_validation() {
        assert!(GadgetParams::tradeoff(rat(0, 1), rat(1, 2)).validate().is_err());
        assert!(GadgetParams { eps: rat(1, 2), delta: rat(1, 1), mode: Mode::Plain }.validate().is_err());
        assert!(GadgetParams::tradeoff(rat(1, 2), rat(1, 2)).validate().is_ok());
    }
}
