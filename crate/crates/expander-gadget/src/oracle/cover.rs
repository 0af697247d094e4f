use super::check_budget;
use crate::error::Result;
use crate::graph::Graph;

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Cover size of disjoint cycles: ⌈len/2⌉ each.
fn cycles_cover(mut alive: u64, adj: &[u64]) -> usize {
    let mut total = 0;
    while alive != 0 {
        let start = alive.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, v| acc | adj[v]) & alive & !comp;
            comp |= next;
            frontier = next;
        }
        total += (comp.count_ones() as usize).div_ceil(2);
        alive &= !comp;
    }
    total
}

fn vc(mut alive: u64, mut taken: usize, adj: &[u64], best: &mut usize) {
    loop {
        if taken >= *best {
            return;
        }
        let mut changed = false;
        for v in bits(alive) {
            if alive >> v & 1 == 0 {
                continue;
            }
            let nb = adj[v] & alive;
            match nb.count_ones() {
                0 => alive &= !(1 << v),
                1 => {
                    taken += 1;
                    alive &= !(nb | 1 << v);
                }
                _ => continue,
            }
            changed = true;
        }
        if !changed {
            break;
        }
    }
    if taken >= *best {
        return;
    }
    if alive == 0 {
        *best = taken;
        return;
    }
    let degs: Vec<(usize, u32)> = bits(alive).map(|v| (v, (adj[v] & alive).count_ones())).collect();
    let (v, maxdeg) = degs.iter().copied().max_by_key(|&(v, d)| (d, std::cmp::Reverse(v))).unwrap();
    if maxdeg <= 2 {
        *best = (*best).min(taken + cycles_cover(alive, adj));
        return;
    }
    let edges: u32 = degs.iter().map(|&(_, d)| d).sum::<u32>() / 2;
    if taken + edges.div_ceil(maxdeg) as usize >= *best {
        return;
    }
    let nb = adj[v] & alive;
    vc(alive & !nb & !(1 << v), taken + nb.count_ones() as usize, adj, best);
    vc(alive & !(1 << v), taken + 1, adj, best);
}

/// Minimum vertex cover by branch and bound (degree-0/1 reductions, max-degree branching).
pub fn min_vertex_cover(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    check_budget("vertex-cover", n, 0)?;
    let adj = g.bitmasks();
    let mut best = n;
    vc(full(n), 0, &adj, &mut best);
    Ok(best)
}

fn ds(dominated: u64, allowed: u64, count: usize, all: u64, closed: &[u64], best: &mut usize) {
    if dominated == all {
        *best = (*best).min(count);
        return;
    }
    if count + 1 >= *best {
        return;
    }
    let undominated = all & !dominated;
    let cover = bits(allowed).map(|w| (closed[w] & undominated).count_ones()).max().unwrap_or(0);
    if cover == 0 || count + undominated.count_ones().div_ceil(cover) as usize >= *best {
        return;
    }
    let u = bits(undominated).min_by_key(|&u| ((closed[u] & allowed).count_ones(), u)).unwrap();
    let mut cands: Vec<usize> = bits(closed[u] & allowed).collect();
    cands.sort_by_key(|&w| (std::cmp::Reverse((closed[w] & undominated).count_ones()), w));
    let mut allowed = allowed;
    for w in cands {
        ds(dominated | closed[w], allowed, count + 1, all, closed, best);
        allowed &= !(1 << w);
    }
}

/// Minimum dominating set by branch and bound on the least-coverable undominated vertex.
pub fn min_dominating_set(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    check_budget("dominating-set", n, 0)?;
    let closed: Vec<u64> = g.bitmasks().iter().enumerate().map(|(v, m)| m | 1 << v).collect();
    let all = full(n);
    let mut best = n;
    ds(0, all, 0, all, &closed, &mut best);
    Ok(best)
}

/// Minimum vertex cover by subset enumeration.
pub fn min_vertex_cover_enumerate(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    check_budget("subset-enumeration", n, 0)?;
    let adj = g.bitmasks();
    let mut best = n;
    for s in 0u64..(1u64 << n) {
        let size = s.count_ones() as usize;
        if size < best && (0..n).all(|v| s >> v & 1 == 1 || adj[v] & !s == 0) {
            best = size;
        }
    }
    Ok(best)
}

/// Minimum dominating set by subset enumeration.
pub fn min_dominating_set_enumerate(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    check_budget("subset-enumeration", n, 0)?;
    let closed: Vec<u64> = g.bitmasks().iter().enumerate().map(|(v, m)| m | 1 << v).collect();
    let all = full(n);
    let mut best = n;
    for s in 0u64..(1u64 << n) {
        let size = s.count_ones() as usize;
        if size < best && bits(s).fold(0, |acc, v| acc | closed[v]) == all {
            best = size;
        }
    }
    Ok(best)
}
