use super::check_budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Forward adjacency bitsets: row v holds the neighbours w > v.
fn forward_rows(g: &Graph) -> (usize, Vec<Vec<u64>>) {
    let n = g.vertex_count();
    let words = n.div_ceil(64).max(1);
    let rows = (0..n)
        .map(|v| {
            let mut row = vec![0u64; words];
            for w in g.neighbors(v).filter(|&w| w > v) {
                row[w / 64] |= 1 << (w % 64);
            }
            row
        })
        .collect();
    (words, rows)
}

fn count_from(cand: &[u64], depth: usize, rows: &[Vec<u64>]) -> u64 {
    if depth == 1 {
        return cand.iter().map(|w| w.count_ones() as u64).sum();
    }
    let mut total = 0;
    for (i, &word) in cand.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let v = i * 64 + bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let next: Vec<u64> = cand.iter().zip(&rows[v]).map(|(a, b)| a & b).collect();
            if next.iter().any(|&w| w != 0) {
                total += count_from(&next, depth - 1, rows);
            }
        }
    }
    total
}

/// Number of k-cliques, by backtracking over increasing vertex ids.
pub fn count_k_cliques(g: &Graph, k: usize) -> Result<u64> {
    let n = g.vertex_count();
    check_budget("k-clique", n, g.edge_count())?;
    match k {
        0 => return Err(Error::InvalidInput("k must be at least 1".into())),
        1 => return Ok(n as u64),
        _ => {}
    }
    let (_, rows) = forward_rows(g);
    Ok((0..n).map(|v| count_from(&rows[v], k - 1, &rows)).sum())
}

fn expand(size: usize, mut p: u64, adj: &[u64], best: &mut usize) {
    if p == 0 {
        *best = (*best).max(size);
        return;
    }
    // greedy colouring gives an upper bound on the clique inside p
    let mut order = Vec::with_capacity(p.count_ones() as usize);
    let mut uncolored = p;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !adj[v] & !(1 << v);
            uncolored &= !(1 << v);
            order.push((v, color));
        }
    }
    for &(v, c) in order.iter().rev() {
        if size + c <= *best {
            return;
        }
        expand(size + 1, p & adj[v], adj, best);
        p &= !(1 << v);
    }
}

/// Maximum clique size by branch and bound with a colouring bound.
pub fn max_clique(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    check_budget("max-clique", n, 0)?;
    if n == 0 {
        return Ok(0);
    }
    let adj = g.bitmasks();
    let mut best = 0;
    expand(0, if n == 64 { u64::MAX } else { (1 << n) - 1 }, &adj, &mut best);
    Ok(best)
}

/// Maximum clique size by subset enumeration.
pub fn max_clique_enumerate(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    check_budget("subset-enumeration", n, 0)?;
    let adj = g.bitmasks();
    let mut best = 0;
    for s in 0u64..(1u64 << n) {
        let size = s.count_ones() as usize;
        if size > best && (0..n).all(|v| s >> v & 1 == 0 || (adj[v] | 1 << v) & s == s) {
            best = size;
        }
    }
    Ok(best)
}
