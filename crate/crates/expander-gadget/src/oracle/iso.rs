use super::check_budget;
use crate::error::Result;
use crate::graph::Graph;

/// Whether `g` contains `h` as a (not necessarily induced) subgraph.
pub fn subgraph_iso(g: &Graph, h: &Graph) -> Result<bool> {
    let k = h.vertex_count();
    check_budget("subgraph-iso", k, 0)?;
    if k == 0 {
        return Ok(true);
    }
    if k > g.vertex_count() || h.edge_count() > g.edge_count() {
        return Ok(false);
    }
    // connectivity-first order: each vertex after the first prefers placed neighbours
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (h.neighbors(v).filter(|&w| placed[w]).count(), h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; g.vertex_count()];
    Ok(extend(0, &order, g, h, &mut map, &mut used))
}

fn extend(i: usize, order: &[usize], g: &Graph, h: &Graph, map: &mut [usize], used: &mut [bool]) -> bool {
    if i == order.len() {
        return true;
    }
    let x = order[i];
    let anchors: Vec<usize> = h.neighbors(x).filter(|&w| map[w] != usize::MAX).map(|w| map[w]).collect();
    let cands: Vec<usize> = match anchors.first() {
        Some(&a) => g.neighbors(a).collect(),
        None => (0..g.vertex_count()).collect(),
    };
    for c in cands {
        if used[c] || g.degree(c) < h.degree(x) || !anchors.iter().all(|&a| g.has_edge(a, c)) {
            continue;
        }
        map[x] = c;
        used[c] = true;
        if extend(i + 1, order, g, h, map, used) {
            return true;
        }
        used[c] = false;
        map[x] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns() {
        let c4 = Graph::cycle(4);
        assert!(subgraph_iso(&Graph::complete(4), &c4).unwrap());
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!subgraph_iso(&tree, &c4).unwrap());
        assert!(subgraph_iso(&Graph::complete(3), &Graph::complete(3)).unwrap());
        assert!(!subgraph_iso(&Graph::cycle(5), &Graph::complete(3)).unwrap());
        assert!(subgraph_iso(&Graph::cycle(6), &Graph::path(6)).unwrap());
    }
}
