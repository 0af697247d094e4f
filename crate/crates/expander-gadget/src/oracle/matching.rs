use super::check_budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::VecDeque;

const NIL: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NIL {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NIL);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            let nbrs: Vec<usize> = self.g.neighbors(v).collect();
            for to in nbrs {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NIL && self.parent[self.mate[to]] != NIL) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NIL {
                    self.parent[to] = v;
                    if self.mate[to] == NIL {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    q.push_back(m);
                }
            }
        }
        None
    }
}

/// Maximum matching size via augmenting paths with blossom contraction.
pub fn max_matching(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    check_budget("matching", n, g.edge_count())?;
    let mut b = Blossom {
        g,
        mate: vec![NIL; n],
        parent: vec![NIL; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
    };
    for v in 0..n {
        if b.mate[v] == NIL {
            if let Some(w) = g.neighbors(v).find(|&w| b.mate[w] == NIL) {
                b.mate[v] = w;
                b.mate[w] = v;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] != NIL {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NIL {
                let pv = b.parent[v];
                let next = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = next;
            }
        }
    }
    Ok(b.mate.iter().filter(|&&m| m != NIL).count() / 2)
}

/// Maximum matching by memoised search over subsets of used vertices.
pub fn max_matching_exhaustive(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    check_budget("matching-exhaustive", n, 0)?;
    let adj = g.bitmasks();
    let full = (1u32 << n) - 1;
    let mut memo = vec![u8::MAX; 1 << n];
    fn go(used: u32, full: u32, adj: &[u64], memo: &mut [u8]) -> u8 {
        if used == full {
            return 0;
        }
        if memo[used as usize] != u8::MAX {
            return memo[used as usize];
        }
        let v = (!used).trailing_zeros() as usize;
        let mut best = go(used | 1 << v, full, adj, memo);
        let mut free = adj[v] as u32 & !used;
        while free != 0 {
            let w = free.trailing_zeros();
            best = best.max(1 + go(used | 1 << v | 1 << w, full, adj, memo));
            free &= free - 1;
        }
        memo[used as usize] = best;
        best
    }
    Ok(go(0, full, &adj, &mut memo) as usize)
}

/// Maximum matching of a bipartite graph; `left[v]` names v's side.
pub fn hopcroft_karp(g: &Graph, left: &[bool]) -> Result<usize> {
    let n = g.vertex_count();
    check_budget("bipartite-pm", n, g.edge_count())?;
    if left.len() != n || !g.respects_bipartition(left) {
        return Err(Error::NotBipartite);
    }
    let mut mate = vec![NIL; n];
    let mut dist = vec![u32::MAX; n];
    let lefts: Vec<usize> = (0..n).filter(|&v| left[v]).collect();
    let mut size = 0;
    loop {
        // layered BFS from free left vertices
        let mut q = VecDeque::new();
        for &u in &lefts {
            if mate[u] == NIL {
                dist[u] = 0;
                q.push_back(u);
            } else {
                dist[u] = u32::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = q.pop_front() {
            for w in g.neighbors(u) {
                match mate[w] {
                    NIL => found = true,
                    m if dist[m] == u32::MAX => {
                        dist[m] = dist[u] + 1;
                        q.push_back(m);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            return Ok(size);
        }
        fn augment(u: usize, g: &Graph, mate: &mut [usize], dist: &mut [u32]) -> bool {
            let nbrs: Vec<usize> = g.neighbors(u).collect();
            for w in nbrs {
                let m = mate[w];
                if m == NIL || (dist[m] == dist[u] + 1 && augment(m, g, mate, dist)) {
                    mate[u] = w;
                    mate[w] = u;
                    return true;
                }
            }
            dist[u] = u32::MAX;
            false
        }
        for &u in &lefts {
            if mate[u] == NIL && augment(u, g, &mut mate, &mut dist) {
                size += 1;
            }
        }
    }
}

/// Whether a perfect matching exists between the two given sides.
pub fn bipartite_perfect_matching(g: &Graph, left: &[bool]) -> Result<bool> {
    let l = left.iter().filter(|&&x| x).count();
    if 2 * l != g.vertex_count() {
        return Ok(false);
    }
    Ok(hopcroft_karp(g, left)? == l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        for (g, mm) in [(Graph::path(4), 2), (Graph::complete(4), 2), (Graph::new(5), 0), (Graph::cycle(5), 2)] {
            assert_eq!(max_matching(&g).unwrap(), mm);
            assert_eq!(max_matching_exhaustive(&g).unwrap(), mm);
        }
    }

    #[test]
    fn blossom_needed() {
        // triangle with tails on two corners: greedy-friendly orders miss the blossom
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(max_matching(&g).unwrap(), 3);
        assert_eq!(max_matching_exhaustive(&g).unwrap(), 3);
    }

    #[test]
    fn perfect_matchings() {
        let k22 = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(bipartite_perfect_matching(&k22, &[true, true, false, false]).unwrap());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!bipartite_perfect_matching(&star, &[true, false, false, false]).unwrap());
        assert!(matches!(bipartite_perfect_matching(&star, &[true, true, false, false]), Err(Error::NotBipartite)));
        // centre plus an isolated vertex on the left, two leaves on the right
        let g = Graph::from_edges(4, &[(0, 2), (0, 3)]).unwrap();
        assert!(!bipartite_perfect_matching(&g, &[true, true, false, false]).unwrap());
        assert!(!bipartite_perfect_matching(&Graph::new(2), &[true, false]).unwrap());
    }
}
