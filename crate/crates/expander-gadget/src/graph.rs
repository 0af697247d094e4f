//! Undirected simple graphs with incremental degree accounting.

use crate::error::{Error, Result};
use std::collections::{BTreeSet, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![BTreeSet::new(); n], edge_count: 0 }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.insert_edge(u, (u + 1) % n).unwrap();
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.insert_edge(u - 1, u).unwrap();
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Appends `k` isolated vertices and returns the id of the first one.
    pub fn add_vertices(&mut self, k: usize) -> usize {
        let first = self.adj.len();
        self.adj.resize(first + k, BTreeSet::new());
        first
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u == v || u >= n || v >= n {
            return Err(Error::InvalidEdge(u, v));
        }
        Ok(())
    }

    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if !self.adj[u].insert(v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn delete_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.adj.len() || v >= self.adj.len() || !self.adj[u].remove(&v) {
            return Err(Error::MissingEdge(u, v));
        }
        self.adj[v].remove(&u);
        self.edge_count -= 1;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn volume<I: IntoIterator<Item = usize>>(&self, set: I) -> usize {
        set.into_iter().map(|v| self.degree(v)).sum()
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    h.insert_edge(i, j).unwrap();
                }
            }
        }
        h
    }

    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n == 0 {
            return true;
        }
        self.bfs(0).iter().all(|d| d.is_some())
    }

    /// Hop distances from `s`.
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        let mut q = VecDeque::new();
        dist[s] = Some(0);
        q.push_back(s);
        while let Some(u) = q.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// A proper 2-colouring (`false` on the smallest id of each component), if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.adj.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            q.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Checks that every edge crosses the given bipartition.
    pub fn respects_bipartition(&self, side: &[bool]) -> bool {
        self.edges().all(|(u, v)| side[u] != side[v])
    }

    /// Neighbourhood bitmasks; only valid for graphs with at most 64 vertices.
    pub fn bitmasks(&self) -> Vec<u64> {
        assert!(self.adj.len() <= 64);
        self.adj.iter().map(|nb| nb.iter().fold(0u64, |m, &w| m | (1u64 << w))).collect()
    }
}

/// A vertex set `S` naming one side of a cut.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    side: Vec<usize>,
}

impl Cut {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let set: BTreeSet<usize> = vertices.into_iter().collect();
        Cut { side: set.into_iter().collect() }
    }

    pub fn from_mask(mask: u64, n: usize) -> Self {
        Cut { side: (0..n).filter(|&v| mask >> v & 1 == 1).collect() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.side
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    pub fn complement(&self, n: usize) -> Cut {
        let mut inside = vec![false; n];
        for &v in &self.side {
            inside[v] = true;
        }
        Cut { side: (0..n).filter(|&v| !inside[v]).collect() }
    }

    pub fn membership(&self, n: usize) -> Vec<bool> {
        let mut inside = vec![false; n];
        for &v in &self.side {
            inside[v] = true;
        }
        inside
    }
}
