use super::check_budget;
use crate::error::Result;
use crate::graph::Graph;
use std::collections::BTreeMap;

/// Classes of vertices with identical open neighbourhoods, ordered by smallest member.
/// Members of a class are pairwise non-adjacent.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut by_nbhd: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        by_nbhd.entry(g.neighbors(v).collect()).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_nbhd.into_values().collect();
    classes.sort();
    classes
}

struct Quotient {
    classes: Vec<Vec<usize>>,
    /// Weighted adjacency lists: (class, |A|·|B|).
    nbrs: Vec<Vec<(usize, i64)>>,
}

fn quotient(g: &Graph) -> Quotient {
    let classes = twin_classes(g);
    let mut class_of = vec![0; g.vertex_count()];
    for (c, members) in classes.iter().enumerate() {
        for &v in members {
            class_of[v] = c;
        }
    }
    let nbrs = classes
        .iter()
        .map(|members| {
            let mut row: BTreeMap<usize, i64> = BTreeMap::new();
            for w in g.neighbors(members[0]) {
                *row.entry(class_of[w]).or_default() += members.len() as i64;
            }
            row.into_iter().collect()
        })
        .collect();
    Quotient { classes, nbrs }
}

/// Gray-code walk over class 2-colourings with the last class fixed on side `false`.
/// Calls `visit(value, sides)` for every colouring, including the all-false one.
fn walk(nbrs: &[Vec<(usize, i64)>], mut visit: impl FnMut(i64, &[bool])) {
    let q = nbrs.len();
    let mut side = vec![false; q];
    let mut cur = 0i64;
    visit(cur, &side);
    if q < 2 {
        return;
    }
    for step in 1u64..(1u64 << (q - 1)) {
        let i = step.trailing_zeros() as usize;
        let delta: i64 = nbrs[i].iter().map(|&(j, w)| if side[j] == side[i] { w } else { -w }).sum();
        side[i] = !side[i];
        cur += delta;
        visit(cur, &side);
    }
}

/// Maximum cut value. Twins are merged first; the enumeration budget applies to the quotient.
pub fn max_cut(g: &Graph) -> Result<u64> {
    let q = quotient(g);
    check_budget("max-cut", q.classes.len(), 0)?;
    let mut best = 0;
    walk(&q.nbrs, |v, _| best = best.max(v));
    Ok(best as u64)
}

/// Maximum cut value together with up to `limit` optimal colourings in which
/// every twin class is monochromatic (the vertex-level colouring is returned).
pub fn max_cut_optima(g: &Graph, limit: usize) -> Result<(u64, Vec<Vec<bool>>)> {
    let q = quotient(g);
    check_budget("max-cut", q.classes.len(), 0)?;
    let mut best = 0;
    let mut found: Vec<Vec<bool>> = Vec::new();
    walk(&q.nbrs, |v, side| {
        if v > best {
            best = v;
            found.clear();
        }
        if v == best && found.len() < limit {
            found.push(side.to_vec());
        }
    });
    let optima = found
        .into_iter()
        .map(|side| {
            let mut out = vec![false; g.vertex_count()];
            for (c, members) in q.classes.iter().enumerate() {
                for &v in members {
                    out[v] = side[c];
                }
            }
            out
        })
        .collect();
    Ok((best as u64, optima))
}

/// Plain enumeration over vertex colourings, without twin merging.
pub fn max_cut_plain(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    check_budget("max-cut", n, 0)?;
    let nbrs: Vec<Vec<(usize, i64)>> = (0..n).map(|v| g.neighbors(v).map(|w| (w, 1)).collect()).collect();
    let mut best = 0;
    walk(&nbrs, |v, _| best = best.max(v));
    Ok(best as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(max_cut(&Graph::cycle(4)).unwrap(), 4);
        assert_eq!(max_cut(&Graph::complete(3)).unwrap(), 2);
        assert_eq!(max_cut(&Graph::new(5)).unwrap(), 0);
        assert_eq!(max_cut(&Graph::complete(5)).unwrap(), 6);
    }

    #[test]
    fn twins_of_complete_bipartite() {
        let mut edges = Vec::new();
        for a in 0..5 {
            for b in 5..12 {
                edges.push((a, b));
            }
        }
        let g = Graph::from_edges(12, &edges).unwrap();
        assert_eq!(twin_classes(&g).len(), 2);
        assert_eq!(max_cut(&g).unwrap(), 35);
    }

    #[test]
    fn optima_of_c4() {
        let (v, opt) = max_cut_optima(&Graph::cycle(4), 16).unwrap();
        assert_eq!(v, 4);
        assert!(opt.iter().all(|s| s[0] == s[2] && s[1] == s[3] && s[0] != s[1]));
    }
}
