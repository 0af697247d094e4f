use super::check_budget;
use crate::error::Result;
use crate::graph::Graph;
use crate::ratio::{rat, Rational};
use std::collections::VecDeque;

/// Exact maximum density e(S)/|S| and the union of all maximizers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Densest {
    pub density: Rational,
    pub vertices: Vec<usize>,
}

struct Dinic {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<i64>,
    next: Vec<usize>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic { head: vec![NIL; n], to: vec![], cap: vec![], next: vec![], level: vec![0; n], iter: vec![0; n] }
    }

    fn add(&mut self, u: usize, v: usize, c: i64, rc: i64) {
        for (a, b, cc) in [(u, v, c), (v, u, rc)] {
            self.to.push(b);
            self.cap.push(cc);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut e = self.head[u];
            while e != NIL {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    q.push_back(v);
                }
                e = self.next[e];
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, f: i64) -> i64 {
        if u == t {
            return f;
        }
        while self.iter[u] != NIL {
            let e = self.iter[u];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let got = self.dfs(v, t, f.min(self.cap[e]));
                if got > 0 {
                    self.cap[e] -= got;
                    self.cap[e ^ 1] += got;
                    return got;
                }
            }
            self.iter[u] = self.next[e];
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return flow;
            }
            self.iter.clone_from(&self.head);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    /// Vertices that cannot reach `t` in the residual graph.
    fn not_reaching(&self, t: usize) -> Vec<bool> {
        let n = self.head.len();
        let mut reach = vec![false; n];
        reach[t] = true;
        let mut stack = vec![t];
        while let Some(v) = stack.pop() {
            let mut e = self.head[v];
            while e != NIL {
                let u = self.to[e];
                if !reach[u] && self.cap[e ^ 1] > 0 {
                    reach[u] = true;
                    stack.push(u);
                }
                e = self.next[e];
            }
        }
        reach.into_iter().map(|r| !r).collect()
    }
}

/// Builds the network for max_S (q·e(S) − p·|S|) and returns
/// (that maximum, the largest maximizing set).
fn parametric(g: &Graph, p: i64, q: i64) -> (i64, Vec<usize>) {
    let n = g.vertex_count();
    let big = q * g.edge_count() as i64;
    let (s, t) = (n, n + 1);
    let mut net = Dinic::new(n + 2);
    for v in 0..n {
        net.add(s, v, big, 0);
        net.add(v, t, big + 2 * p - q * g.degree(v) as i64, 0);
    }
    for (u, v) in g.edges() {
        net.add(u, v, q, q);
    }
    let cut = net.max_flow(s, t);
    let best = (n as i64 * big - cut) / 2;
    let side = net.not_reaching(t);
    (best, (0..n).filter(|&v| side[v]).collect())
}

/// Exact densest subgraph by Goldberg's cut test with Dinkelbach iteration.
pub fn densest(g: &Graph) -> Result<Densest> {
    let n = g.vertex_count();
    check_budget("densest", n, g.edge_count())?;
    if g.edge_count() == 0 {
        return Ok(Densest { density: rat(0, 1), vertices: (0..n).collect() });
    }
    let mut lambda = rat(g.edge_count() as i64, n as i64);
    loop {
        let (best, set) = parametric(g, *lambda.numer(), *lambda.denom());
        if best == 0 {
            return Ok(Densest { density: lambda, vertices: set });
        }
        let inside = mask(n, &set);
        let e = g.edges().filter(|&(u, v)| inside[u] && inside[v]).count();
        let next = rat(e as i64, set.len() as i64);
        debug_assert!(next > lambda);
        lambda = next;
    }
}

fn mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    set.iter().for_each(|&v| m[v] = true);
    m
}

/// Maximum density by enumerating every nonempty subset.
pub fn densest_brute_force(g: &Graph) -> Result<Rational> {
    let n = g.vertex_count();
    check_budget("densest-brute", n, 0)?;
    let adj = g.bitmasks();
    let mut best = rat(0, 1);
    for s in 1u64..(1u64 << n) {
        let mut twice = 0;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            twice += (adj[v] & s).count_ones() as i64;
            rest &= rest - 1;
        }
        let d = rat(twice / 2, s.count_ones() as i64);
        if d > best {
            best = d;
        }
    }
    Ok(best)
}
