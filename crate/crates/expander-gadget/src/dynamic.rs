//! Fully dynamic maintenance of G_exp under edge updates to G.

use crate::error::{Error, Result};
use crate::expander::BipartiteExpander;
use crate::gadget::{self, ExpanderizedGraph, Role};
use crate::graph::Graph;
use crate::io::{EdgeUpdate, Op};
use crate::ratio::{rat, Rational};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Amortized events-per-update ceiling checked by [`DynamicExpanderState::amortization_report`].
pub const AMORT_BOUND: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Layer {
    GEdge,
    VToL,
    Expander,
    Gadget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UpdateEvent {
    pub op: Op,
    pub u: usize,
    pub v: usize,
    pub layer: Layer,
}

impl UpdateEvent {
    pub fn edge_update(&self) -> EdgeUpdate {
        EdgeUpdate { op: self.op, u: self.u, v: self.v }
    }
}

/// Vertices of L ordered by (degree, id).
#[derive(Debug, Clone, Default)]
pub struct LIndex {
    deg: Vec<usize>,
    buckets: BTreeMap<usize, BTreeSet<usize>>,
}

impl LIndex {
    fn new(degrees: Vec<usize>) -> Self {
        let mut buckets: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for (x, &d) in degrees.iter().enumerate() {
            buckets.entry(d).or_default().insert(x);
        }
        LIndex { deg: degrees, buckets }
    }

    fn shift(&mut self, x: usize, up: bool) {
        let d = self.deg[x];
        let set = self.buckets.get_mut(&d).unwrap();
        set.remove(&x);
        if set.is_empty() {
            self.buckets.remove(&d);
        }
        let nd = if up { d + 1 } else { d - 1 };
        self.deg[x] = nd;
        self.buckets.entry(nd).or_default().insert(x);
    }

    pub fn min_degree(&self) -> usize {
        self.buckets.keys().next().copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.buckets.keys().next_back().copied().unwrap_or(0)
    }

    pub fn degree(&self, x: usize) -> usize {
        self.deg[x]
    }

    /// L indices in increasing (degree, id) order.
    pub fn ascending(&self) -> impl Iterator<Item = usize> + '_ {
        self.buckets.values().flat_map(|s| s.iter().copied())
    }
}

/// Instrumentation for tests and reports.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub updates: u64,
    pub balances: u64,
    pub recomputes: u64,
    /// Largest `successor queries / (2k+3)` numerator over UPDATE calls, stored as (queries, k).
    pub worst_successor: (usize, usize),
    /// G-insertions between consecutive BALANCE calls with no RECOMPUTE in between.
    pub balance_gaps: Vec<u64>,
    /// (Δ_L, δ_L) observed when each triggered BALANCE fired.
    pub balance_triggers: Vec<(usize, usize)>,
    insertions_since_balance: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmortizationReport {
    pub total_updates_in: u64,
    pub total_events_out: u64,
    pub m0: usize,
    pub n: usize,
    pub ratio: f64,
    pub bound: f64,
    pub violation: bool,
}

#[derive(Debug, Clone)]
pub struct DynamicExpanderState {
    g: Graph,
    gexp: Graph,
    labels: Vec<Role>,
    n: usize,
    n_side: usize,
    eps: Rational,
    deg_l: Vec<usize>,
    l_index: LIndex,
    m_checkpoint: usize,
    m0: usize,
    /// Expanders whose edges may be present: one normally, two during RECOMPUTE.
    expanders: Vec<BipartiteExpander>,
    /// Present-edge count per entry of `expanders`.
    present: Vec<usize>,
    emitted: u64,
    updates_in: u64,
    counters: Counters,
    check_events: bool,
    violations: Vec<String>,
    violation_count: u64,
    checked_events: u64,
}

impl DynamicExpanderState {
    /// Plain dynamic gadget (quotas deg + 3).
    pub fn new(g0: &Graph) -> Result<Self> {
        Self::with_eps(g0, rat(1, 1))
    }

    /// Quotas ⌈eps·deg⌉ + 3 with N = n + 2; eps = 1 is the plain gadget.
    pub fn with_eps(g0: &Graph, eps: Rational) -> Result<Self> {
        if eps <= rat(0, 1) || eps > rat(1, 1) {
            return Err(Error::InvalidInput("eps must lie in (0, 1]".into()));
        }
        let x = static_gadget(g0, eps)?;
        let n = g0.vertex_count();
        let deg_l = (0..n).map(|v| x.attachments[v].targets.len()).collect();
        let l_index = LIndex::new(x.l_vertices().map(|v| x.graph.degree(v)).collect());
        Ok(DynamicExpanderState {
            g: g0.clone(),
            emitted: x.graph.edge_count() as u64,
            gexp: x.graph,
            labels: x.labels,
            n,
            n_side: x.n_side,
            eps,
            deg_l,
            l_index,
            m_checkpoint: g0.edge_count(),
            m0: g0.edge_count(),
            present: vec![x.expander.side_size() * x.expander.degree()],
            expanders: vec![x.expander],
            updates_in: 0,
            counters: Counters::default(),
            check_events: false,
            violations: Vec::new(),
            violation_count: 0,
            checked_events: 0,
        })
    }

    /// Starts from `g0` with an explicit V-to-L layout instead of Round-Robin.
    /// `layout[v]` lists the L indices v attaches to; each list must meet v's quota.
    /// Meant for driving the triggers from hand-built states.
    #[doc(hidden)]
    pub fn from_layout(g0: &Graph, eps: Rational, layout: &[Vec<usize>]) -> Result<Self> {
        let mut st = Self::with_eps(g0, eps)?;
        if layout.len() != st.n {
            return Err(Error::InvalidInput("layout needs one slot list per vertex".into()));
        }
        for (v, slots) in layout.iter().enumerate() {
            let set: BTreeSet<usize> = slots.iter().copied().collect();
            if set.len() != slots.len() || set.iter().any(|&x| x >= st.n_side) {
                return Err(Error::InvalidInput(format!("bad slot list for vertex {v}")));
            }
            if slots.len() < gadget::quota(eps, g0.degree(v)) {
                return Err(Error::InvalidInput(format!("slot list for vertex {v} is below quota")));
            }
        }
        for v in 0..st.n {
            for lx in st.current_vl(v) {
                st.gexp.delete_edge(v, lx)?;
            }
        }
        for (v, slots) in layout.iter().enumerate() {
            for &x in slots {
                let lx = st.l(x);
                st.gexp.insert_edge(v, lx)?;
            }
            st.deg_l[v] = slots.len();
        }
        st.l_index = LIndex::new((0..st.n_side).map(|x| st.gexp.degree(st.n + x)).collect());
        st.emitted = st.gexp.edge_count() as u64;
        Ok(st)
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn gexp(&self) -> &Graph {
        &self.gexp
    }

    pub fn labels(&self) -> &[Role] {
        &self.labels
    }

    pub fn n_side(&self) -> usize {
        self.n_side
    }

    pub fn eps(&self) -> Rational {
        self.eps
    }

    pub fn d_x(&self) -> usize {
        self.expanders.last().unwrap().degree()
    }

    pub fn expander(&self) -> &BipartiteExpander {
        self.expanders.last().unwrap()
    }

    pub fn m_checkpoint(&self) -> usize {
        self.m_checkpoint
    }

    pub fn deg_l(&self, v: usize) -> usize {
        self.deg_l[v]
    }

    pub fn l_index(&self) -> &LIndex {
        &self.l_index
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    pub fn counters(&self) -> &Counters {
        &self.counters
    }

    /// Number of V-to-L edges, e(V, L).
    pub fn vl_edges(&self) -> usize {
        self.deg_l.iter().sum()
    }

    fn l(&self, i: usize) -> usize {
        self.n + i
    }

    fn r(&self, i: usize) -> usize {
        self.n + self.n_side + i
    }

    /// The insert events that build the current G_exp from an edgeless graph.
    pub fn snapshot_events(&self) -> Vec<UpdateEvent> {
        self.gexp.edges().map(|(u, v)| UpdateEvent { op: Op::Insert, u, v, layer: self.layer_of(u, v) }).collect()
    }

    fn layer_of(&self, u: usize, v: usize) -> Layer {
        match (self.labels[u], self.labels[v]) {
            (Role::V, Role::V) => Layer::GEdge,
            (Role::V, Role::L) | (Role::L, Role::V) => Layer::VToL,
            (Role::L, Role::R) | (Role::R, Role::L) => Layer::Expander,
            _ => Layer::Gadget,
        }
    }

    /// Re-checks invariants after every emitted event and records violations.
    pub fn enable_event_checks(&mut self) {
        self.check_events = true;
    }

    pub fn violations(&self) -> (&[String], u64, u64) {
        (&self.violations, self.violation_count, self.checked_events)
    }

    fn emit(&mut self, out: &mut Vec<UpdateEvent>, op: Op, u: usize, v: usize, layer: Layer) {
        match op {
            Op::Insert => self.gexp.insert_edge(u, v).expect("emitted insert of a present edge"),
            Op::Delete => self.gexp.delete_edge(u, v).expect("emitted delete of an absent edge"),
        }
        let up = op == Op::Insert;
        for w in [u, v] {
            if self.labels[w] == Role::L {
                self.l_index.shift(w - self.n, up);
            }
        }
        if layer == Layer::Expander {
            let (a, b) = (u.min(v) - self.n, u.max(v) - self.n - self.n_side);
            for (x, p) in self.expanders.iter().zip(self.present.iter_mut()) {
                if x.has_edge(a, b) {
                    if up {
                        *p += 1;
                    } else {
                        *p -= 1;
                    }
                }
            }
        }
        if layer == Layer::VToL {
            let vv = u.min(v);
            if up {
                self.deg_l[vv] += 1;
            } else {
                self.deg_l[vv] -= 1;
            }
        }
        self.emitted += 1;
        out.push(UpdateEvent { op, u, v, layer });
        if self.check_events {
            self.checked_events += 1;
            if let Err(msg) = self.check_invariants() {
                self.violation_count += 1;
                if self.violations.len() < 32 {
                    self.violations.push(format!("after event {}: {msg}", self.emitted));
                }
            }
        }
    }

    pub fn dyn_insert(&mut self, u: usize, v: usize) -> Result<Vec<UpdateEvent>> {
        if self.g.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.g.insert_edge(u, v)?;
        self.updates_in += 1;
        if let Some(c) = self.counters.insertions_since_balance.as_mut() {
            *c += 1;
        }
        let mut out = Vec::new();
        self.emit(&mut out, Op::Insert, u.min(v), u.max(v), Layer::GEdge);
        let m = self.g.edge_count();
        if m >= 2 * self.m_checkpoint + self.n {
            self.recompute_into(&mut out)?;
            return Ok(out);
        }
        for w in [v, u] {
            if self.update_due(w) {
                self.update_into(w, &mut out)?;
                let (hi, lo) = (self.l_index.max_degree(), self.l_index.min_degree());
                if hi >= 2 * lo {
                    self.counters.balance_triggers.push((hi, lo));
                    self.balance_into(&mut out);
                }
            }
        }
        Ok(out)
    }

    pub fn dyn_delete(&mut self, u: usize, v: usize) -> Result<Vec<UpdateEvent>> {
        if !self.g.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        self.g.delete_edge(u, v)?;
        self.updates_in += 1;
        let mut out = Vec::new();
        self.emit(&mut out, Op::Delete, u.min(v), u.max(v), Layer::GEdge);
        let m = self.g.edge_count();
        if self.n <= m && 2 * m <= self.m_checkpoint {
            self.recompute_into(&mut out)?;
        }
        Ok(out)
    }

    pub fn apply(&mut self, up: &EdgeUpdate) -> Result<Vec<UpdateEvent>> {
        match up.op {
            Op::Insert => self.dyn_insert(up.u, up.v),
            Op::Delete => self.dyn_delete(up.u, up.v),
        }
    }

    /// eps·deg_G(v) ≥ 2·deg_L(v).
    fn update_due(&self, v: usize) -> bool {
        let lhs = *self.eps.numer() as i128 * self.g.degree(v) as i128;
        let rhs = 2 * self.deg_l[v] as i128 * *self.eps.denom() as i128;
        lhs >= rhs
    }

    pub fn proc_update(&mut self, v: usize) -> Result<Vec<UpdateEvent>> {
        let mut out = Vec::new();
        self.update_into(v, &mut out)?;
        Ok(out)
    }

    fn update_into(&mut self, v: usize, out: &mut Vec<UpdateEvent>) -> Result<()> {
        let k = self.deg_l[v];
        let need = k + 3;
        let mut picked = Vec::with_capacity(need);
        let mut queries = 0;
        for x in self.l_index.ascending() {
            queries += 1;
            if !self.gexp.has_edge(v, self.n + x) {
                picked.push(x);
                if picked.len() == need {
                    break;
                }
            }
        }
        if picked.len() < need {
            return Err(Error::CapacityExhausted { v, needed: need });
        }
        let (wq, wk) = self.counters.worst_successor;
        if queries * (2 * wk + 3) > wq * (2 * k + 3) {
            self.counters.worst_successor = (queries, k);
        }
        self.counters.updates += 1;
        for x in picked {
            let lx = self.l(x);
            self.emit(out, Op::Insert, v, lx, Layer::VToL);
        }
        Ok(())
    }

    pub fn proc_balance(&mut self) -> Vec<UpdateEvent> {
        let mut out = Vec::new();
        self.balance_into(&mut out);
        out
    }

    fn target_vl(&self) -> Vec<Vec<usize>> {
        let quotas: Vec<usize> = (0..self.n).map(|v| gadget::quota(self.eps, self.g.degree(v))).collect();
        gadget::round_robin(&quotas, self.n_side).expect("quotas fit N = n + 2")
    }

    fn current_vl(&self, v: usize) -> Vec<usize> {
        self.gexp.neighbors(v).filter(|&w| self.labels[w] == Role::L).collect()
    }

    fn replace_vl(&mut self, target: &[Vec<usize>], out: &mut Vec<UpdateEvent>) {
        let old: Vec<Vec<usize>> = (0..self.n).map(|v| self.current_vl(v)).collect();
        for (v, slots) in target.iter().enumerate() {
            for &x in slots {
                let lx = self.l(x);
                if !self.gexp.has_edge(v, lx) {
                    self.emit(out, Op::Insert, v, lx, Layer::VToL);
                }
            }
        }
        for (v, olds) in old.iter().enumerate() {
            let keep: BTreeSet<usize> = target[v].iter().map(|&x| self.l(x)).collect();
            for &lx in olds {
                if !keep.contains(&lx) {
                    self.emit(out, Op::Delete, v, lx, Layer::VToL);
                }
            }
        }
    }

    fn balance_into(&mut self, out: &mut Vec<UpdateEvent>) {
        let target = self.target_vl();
        self.replace_vl(&target, out);
        self.counters.balances += 1;
        if let Some(gap) = self.counters.insertions_since_balance {
            self.counters.balance_gaps.push(gap);
        }
        self.counters.insertions_since_balance = Some(0);
    }

    pub fn proc_recompute(&mut self) -> Result<Vec<UpdateEvent>> {
        let mut out = Vec::new();
        self.recompute_into(&mut out)?;
        Ok(out)
    }

    fn recompute_into(&mut self, out: &mut Vec<UpdateEvent>) -> Result<()> {
        let fresh = static_gadget(&self.g, self.eps)?;
        let new_x = fresh.expander.clone();
        let old_x = self.expanders[0].clone();
        let already = new_x.edges().iter().filter(|&&(a, b)| self.gexp.has_edge(self.l(a), self.r(b))).count();
        self.expanders.push(new_x.clone());
        self.present.push(already);
        for (a, b) in new_x.edges() {
            let (la, rb) = (self.l(a), self.r(b));
            if !self.gexp.has_edge(la, rb) {
                self.emit(out, Op::Insert, la, rb, Layer::Expander);
            }
        }
        for (a, b) in old_x.edges() {
            if !new_x.has_edge(a, b) {
                let (la, rb) = (self.l(a), self.r(b));
                self.emit(out, Op::Delete, la, rb, Layer::Expander);
            }
        }
        self.expanders.remove(0);
        self.present.remove(0);
        let target: Vec<Vec<usize>> =
            (0..self.n).map(|v| fresh.attachments[v].targets.iter().map(|&t| t - self.n).collect()).collect();
        self.replace_vl(&target, out);
        debug_assert_eq!(self.gexp, fresh.graph);
        self.m_checkpoint = self.g.edge_count();
        self.counters.recomputes += 1;
        self.counters.insertions_since_balance = None;
        Ok(())
    }

    pub fn amortization_report(&self) -> AmortizationReport {
        let credit = self.updates_in + self.m0 as u64 + self.n as u64;
        let ratio = self.emitted as f64 / credit.max(1) as f64;
        AmortizationReport {
            total_updates_in: self.updates_in,
            total_events_out: self.emitted,
            m0: self.m0,
            n: self.n,
            ratio,
            bound: AMORT_BOUND,
            violation: ratio > AMORT_BOUND,
        }
    }

    /// The largest-degree expander whose edges are all present, if any.
    fn active_expander(&self) -> Option<&BipartiteExpander> {
        self.expanders
            .iter()
            .zip(&self.present)
            .filter(|(x, &p)| p == x.side_size() * x.degree())
            .map(|(x, _)| x)
            .max_by_key(|x| x.degree())
    }

    /// deg_L(v) ≥ max(3, ⌈eps·deg_G(v)/2⌉); an active certified expander spans L ∪ R;
    /// L-degrees lie in [d_X, 4·d_X].
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        for v in 0..self.n {
            let half = crate::ratio::ceil_mul(self.eps / 2, self.g.degree(v));
            if self.deg_l[v] < half.max(3) {
                return Err(format!("deg_L({v}) = {} below max(3, {half})", self.deg_l[v]));
            }
        }
        let x = self.active_expander().ok_or("no fully present expander")?;
        if !x.certificate().meets_target {
            return Err("active expander is not certified".into());
        }
        let d = x.degree();
        let (lo, hi) = (self.l_index.min_degree(), self.l_index.max_degree());
        if lo < d || hi > 4 * d {
            return Err(format!("L-degrees [{lo}, {hi}] outside [{d}, {}]", 4 * d));
        }
        if !self.gexp.is_simple_consistent() {
            return Err("G_exp lost simplicity".into());
        }
        Ok(())
    }

    /// The state as a static gadget snapshot (valid between updates).
    pub fn to_expanderized(&self) -> Result<ExpanderizedGraph> {
        let mut x = static_gadget(&self.g, self.eps)?;
        let n = self.n;
        x.graph = self.gexp.clone();
        for a in x.attachments.iter_mut() {
            a.targets = self.current_vl(a.vertex);
        }
        x.expander = self.expander().clone();
        x.cert_phi = x.expander.phi();
        let max_l = self.l_index.max_degree();
        x.alpha = rat(max_l as i64, x.expander.degree() as i64);
        x.conductance_claim = Some(x.cert_phi * self.eps / (x.alpha * 5));
        debug_assert_eq!(x.l_offset, n);
        Ok(x)
    }
}

/// The static gadget that dyn_init and RECOMPUTE produce.
pub fn static_gadget(g: &Graph, eps: Rational) -> Result<ExpanderizedGraph> {
    if eps == rat(1, 1) {
        gadget::build_core_gadget(g, gadget::GadgetParams::plain())
    } else {
        gadget::build_tradeoff_gadget(g, eps, rat(1, 1))
    }
}

impl Graph {
    /// Cheap structural check used by the dynamic invariant monitor.
    pub(crate) fn is_simple_consistent(&self) -> bool {
        let sum: usize = (0..self.vertex_count()).map(|v| self.degree(v)).sum();
        sum == 2 * self.edge_count()
    }
}

pub fn dyn_init(g0: &Graph) -> Result<DynamicExpanderState> {
    DynamicExpanderState::new(g0)
}
