use super::{Problem, SolutionMap};
use crate::error::{Error, Result};
use crate::gadget::{self, assemble, ExpanderizedGraph, Mode, Role, Wiring};
use crate::graph::Graph;
use crate::ratio::{self, rat, Rational};

/// Max-Cut reduction: mirrored L/R attachments plus blocks F_L, F_R of 3d vertices
/// joined completely to L and R.
///
/// Every input vertex has equally many neighbours in L and R, so with L and R on
/// opposite sides it cuts exactly half of its gadget edges wherever it sits. The
/// offset is therefore 7dN + e(V,L): dN expander edges, 6dN block edges, and e(V,L)
/// attachment edges.
pub fn wter_max_cut(g: &Graph, eps: Rational) -> Result<(ExpanderizedGraph, SolutionMap)> {
    if eps <= rat(0, 1) || eps > rat(1, 1) {
        return Err(Error::InvalidInput("eps must lie in (0, 1]".into()));
    }
    let n = g.vertex_count();
    let frac = eps * eps;
    let entries: Vec<(usize, usize, usize)> =
        (0..n).map(|v| (v, g.degree(v), ratio::ceil_mul(frac, g.degree(v)) + 3)).collect();
    let max_q = entries.iter().map(|e| e.2).max().unwrap_or(3);
    let e_vl: usize = entries.iter().map(|e| e.2).sum();
    // d = ⌈e(V,L)/N⌉ must fit under N, or L's attachment load outgrows the blocks
    let mut n_side = gadget::feasible_side(ratio::ceil_mul(eps / 2, n), max_q);
    while e_vl.div_ceil(n_side) > n_side {
        n_side += 1;
    }
    let wiring = Wiring { to_l: entries.clone(), to_r: entries, n_side, eps: frac, mode: Mode::Tradeoff };
    let mut x = assemble(g.clone(), vec![Role::V; n], n, g.edge_count(), wiring)?;
    let d = x.expander_degree();
    for (name, side) in [("F_L", x.l_vertices()), ("F_R", x.r_vertices())] {
        let block = x.add_aux(name, 3 * d);
        for f in block {
            for w in side.clone() {
                x.graph.insert_edge(f, w)?;
            }
        }
    }
    Ok((x, SolutionMap::offset(Problem::MaxCut, 7 * d * n_side + e_vl)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn empty_four() {
        let (x, map) = wter_max_cut(&Graph::new(4), rat(1, 1)).unwrap();
        assert_eq!((x.n_side, x.expander_degree()), (4, 3));
        assert_eq!(x.graph.vertex_count(), 4 + 8 + 18);
        let mc = oracle::max_cut(&x.graph).unwrap();
        // 7dN = 84 plus e(V,L) = 12
        assert_eq!(mc, 96);
        assert_eq!(map.recover(rat(mc as i64, 1)), rat(0, 1));
    }

    #[test]
    fn mirrored_attachments() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let (x, _) = wter_max_cut(&g, rat(1, 2)).unwrap();
        for v in 0..5 {
            let l = x.graph.neighbors(v).filter(|w| x.l_vertices().contains(w)).count();
            let r = x.graph.neighbors(v).filter(|w| x.r_vertices().contains(w)).count();
            assert_eq!(l, r);
        }
    }
}
