use crate::error::{Error, Result};
use crate::gadget::{self, ExpanderizedGraph, Role};
use crate::graph::Graph;
use crate::io::{EdgeUpdate, Op};
use crate::ratio::Rational;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    Dist3,
    DistGe5,
}

impl Answer {
    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Dist3 => "dist3",
            Answer::DistGe5 => "dist_ge_5",
        }
    }
}

/// Graphical OMv on a bipartite gadget: a_i–b_j iff M[i][j], with query vertices
/// s (joined to a_i where u_i = 1) and t (joined to b_j where v_j = 1).
///
/// s and t are anchored to the expander through subdivided edges s–s'–x and t–t'–y,
/// where x ∈ L, y ∈ R and xy is not an expander edge. A direct s–x edge would open
/// s–x–y'–b_j–t paths of length 4; with the subdivision every path of length at most 4
/// uses a matrix edge, so dist(s, t) = 3 iff uᵀMv = 1 and is at least 5 otherwise.
#[derive(Debug, Clone)]
pub struct OmvInstance {
    pub k: usize,
    pub matrix: Vec<Vec<bool>>,
    pub gadget: ExpanderizedGraph,
    pub graph: Graph,
    pub labels: Vec<Role>,
    pub s: usize,
    pub t: usize,
    pub s_mid: usize,
    pub t_mid: usize,
    /// (x, y) as L and R indices.
    pub anchor: (usize, usize),
    pub u: Vec<bool>,
    pub v: Vec<bool>,
    pub conductance_claim: Rational,
}

/// Builds the instance for a k×k matrix (k ≥ 2) with empty query vectors.
pub fn omv_build(m: &[Vec<bool>]) -> Result<OmvInstance> {
    let k = m.len();
    if k < 2 || m.iter().any(|row| row.len() != k) {
        return Err(Error::InvalidInput("matrix must be square with k ≥ 2".into()));
    }
    let mut gm = Graph::new(2 * k);
    for (i, row) in m.iter().enumerate() {
        for (j, &bit) in row.iter().enumerate() {
            if bit {
                gm.insert_edge(i, k + j)?;
            }
        }
    }
    let sides: Vec<bool> = (0..2 * k).map(|v| v >= k).collect();
    let x = gadget::build_bipartite_core_gadget(&gm, &sides)?;
    let n_side = x.n_side;
    let anchor = (0..n_side)
        .flat_map(|a| (0..n_side).map(move |b| (a, b)))
        .find(|&(a, b)| !x.expander.has_edge(a, b))
        .ok_or(Error::AnchorUnavailable)?;
    let (lx, ry) = (x.l_vertex(anchor.0), x.r_vertex(anchor.1));
    if x.graph.bfs(lx)[ry].is_none_or(|d| d < 3) {
        return Err(Error::AnchorUnavailable);
    }
    let mut graph = x.graph.clone();
    let s = graph.add_vertices(4);
    let (s_mid, t, t_mid) = (s + 1, s + 2, s + 3);
    for (a, b) in [(s, s_mid), (s_mid, lx), (t, t_mid), (t_mid, ry)] {
        graph.insert_edge(a, b)?;
    }
    let mut labels = x.labels.clone();
    labels.extend([Role::Aux; 4]);
    // four single-vertex attachments, each costing a factor of 4
    let conductance_claim = x.conductance_claim.unwrap_or_default() / 256;
    Ok(OmvInstance {
        k,
        matrix: m.to_vec(),
        gadget: x,
        graph,
        labels,
        s,
        t,
        s_mid,
        t_mid,
        anchor,
        u: vec![false; k],
        v: vec![false; k],
        conductance_claim,
    })
}

impl OmvInstance {
    pub fn a(&self, i: usize) -> usize {
        i
    }

    pub fn b(&self, j: usize) -> usize {
        self.k + j
    }

    /// Edges of the instance before any query, as insertions.
    pub fn initial_events(&self) -> Vec<EdgeUpdate> {
        self.graph.edges().map(|(u, v)| EdgeUpdate { op: Op::Insert, u, v }).collect()
    }

    /// Replaces the query vectors, touching only the s/t edges that change, and
    /// answers by BFS. The returned events are in application order; deletions
    /// come after insertions so s and t never lose their only edges mid-way.
    pub fn query(&mut self, u: &[bool], v: &[bool]) -> Result<(Answer, Vec<EdgeUpdate>)> {
        if u.len() != self.k || v.len() != self.k {
            return Err(Error::InvalidInput(format!("query vectors must have length {}", self.k)));
        }
        let mut inserts = Vec::new();
        let mut deletes = Vec::new();
        for i in 0..self.k {
            for (old, new, hub, end) in [(self.u[i], u[i], self.s, self.a(i)), (self.v[i], v[i], self.t, self.b(i))] {
                if old != new {
                    let ev =
                        EdgeUpdate { op: if new { Op::Insert } else { Op::Delete }, u: hub.min(end), v: hub.max(end) };
                    if new {
                        inserts.push(ev);
                    } else {
                        deletes.push(ev);
                    }
                }
            }
        }
        inserts.extend(deletes);
        for ev in &inserts {
            match ev.op {
                Op::Insert => self.graph.insert_edge(ev.u, ev.v)?,
                Op::Delete => self.graph.delete_edge(ev.u, ev.v)?,
            }
        }
        self.u = u.to_vec();
        self.v = v.to_vec();
        let d = self.graph.bfs(self.s)[self.t].expect("anchors keep s and t connected");
        let answer = if d == 3 { Answer::Dist3 } else { Answer::DistGe5 };
        debug_assert!(d == 3 || d >= 5, "distance {d}");
        Ok((answer, inserts))
    }

    /// uᵀMv over the booleans.
    pub fn product(&self, u: &[bool], v: &[bool]) -> bool {
        (0..self.k).any(|i| u[i] && (0..self.k).any(|j| v[j] && self.matrix[i][j]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(k: usize) -> Vec<Vec<bool>> {
        (0..k).map(|i| (0..k).map(|j| i == j).collect()).collect()
    }

    #[test]
    fn identity_queries() {
        let mut inst = omv_build(&identity(4)).unwrap();
        let e = |i: usize| (0..4).map(|j| j == i).collect::<Vec<bool>>();
        assert_eq!(inst.query(&e(1), &e(1)).unwrap().0, Answer::Dist3);
        assert_eq!(inst.query(&e(1), &e(2)).unwrap().0, Answer::DistGe5);
        assert_eq!(inst.query(&[false; 4], &e(2)).unwrap().0, Answer::DistGe5);
    }

    #[test]
    fn zero_matrix_is_far() {
        let mut inst = omv_build(&vec![vec![false; 3]; 3]).unwrap();
        assert!(inst.graph.is_connected());
        assert_eq!(inst.query(&[true; 3], &[true; 3]).unwrap().0, Answer::DistGe5);
    }

    #[test]
    fn query_diffs_only() {
        let mut inst = omv_build(&identity(3)).unwrap();
        let (_, ev) = inst.query(&[true, false, false], &[false, true, false]).unwrap();
        assert_eq!(ev.len(), 2);
        let (_, ev) = inst.query(&[true, false, false], &[false, false, true]).unwrap();
        assert_eq!(ev.len(), 2);
        assert_eq!((ev[0].op, ev[1].op), (Op::Insert, Op::Delete));
    }
}
