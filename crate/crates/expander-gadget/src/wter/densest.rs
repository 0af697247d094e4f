use super::{Problem, SolutionMap};
use crate::dynamic::DynamicExpanderState;
use crate::error::{Error, Result};
use crate::gadget::{self, ExpanderizedGraph};
use crate::graph::Graph;
use crate::oracle;
use crate::ratio::{self, rat, Rational};

pub const STATIC_EPS: (i64, i64) = (1, 17);
pub const DYNAMIC_EPS: (i64, i64) = (1, 44);

fn dense_enough(g: &Graph) -> Result<()> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if m <= 42 * n {
        return Err(Error::DensityTooLow { m, bound: 42 * n });
    }
    Ok(())
}

/// Densest-subgraph reduction. Needs m > 42n; the gadget uses ε = 1/17 and N = n + 2.
///
/// Every L∪R vertex must have degree below the output's average density m_exp/n_exp,
/// so no densest subgraph of the output can use one; this is checked on every build.
pub fn wter_densest(g: &Graph) -> Result<(ExpanderizedGraph, SolutionMap)> {
    dense_enough(g)?;
    let eps = rat(STATIC_EPS.0, STATIC_EPS.1);
    let x = gadget::build_tradeoff_gadget(g, eps, rat(1, 1))?;
    let mu = x.l_vertices().chain(x.r_vertices()).map(|v| x.graph.degree(v)).max().unwrap_or(0);
    let (n_exp, m_exp) = (x.graph.vertex_count(), x.graph.edge_count());
    if mu * n_exp >= m_exp {
        return Err(Error::InvalidInput(format!("gadget degree {mu} is not below the output density {m_exp}/{n_exp}")));
    }
    Ok((x, SolutionMap::identity(Problem::Densest)))
}

/// Dynamic variant: a dynamic gadget with ε = 1/44 driven by the input's updates.
pub fn wter_densest_dynamic(g: &Graph) -> Result<(DynamicExpanderState, SolutionMap)> {
    dense_enough(g)?;
    let st = DynamicExpanderState::with_eps(g, rat(DYNAMIC_EPS.0, DYNAMIC_EPS.1))?;
    Ok((st, SolutionMap::identity(Problem::Densest)))
}

/// εm + 3n ≤ e(V,L) ≤ 4εm + 4n evaluated on a dynamic state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensestBounds {
    pub e_vl: usize,
    pub lower: Rational,
    pub upper: Rational,
}

impl DensestBounds {
    pub fn holds(&self) -> bool {
        let e = rat(self.e_vl as i64, 1);
        self.lower <= e && e <= self.upper
    }
}

pub fn densest_dynamic_bounds(st: &DynamicExpanderState) -> DensestBounds {
    let eps = st.eps();
    let n = st.graph().vertex_count() as i64;
    let m = st.graph().edge_count() as i64;
    DensestBounds { e_vl: st.vl_edges(), lower: eps * m + 3 * n, upper: eps * m * 4 + 4 * n }
}

/// Attaches a (2C+1)-clique to every vertex (the vertex plus 2C new ones).
/// Requires ρ(G) < C + 1/2, checked with the exact oracle.
pub fn wter_densify(g: &Graph, c: usize) -> Result<(Graph, SolutionMap)> {
    if c == 0 {
        return Err(Error::InvalidInput("C must be at least 1".into()));
    }
    let rho = oracle::densest(g)?.density;
    if rho >= rat(2 * c as i64 + 1, 2) {
        return Err(Error::DensityTooHigh { rho: ratio::fmt(rho) });
    }
    let n = g.vertex_count();
    let mut out = g.clone();
    for v in 0..n {
        let first = out.add_vertices(2 * c);
        let clique: Vec<usize> = std::iter::once(v).chain(first..first + 2 * c).collect();
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                out.insert_edge(a, b)?;
            }
        }
    }
    let size = 2 * c as i64 + 1;
    Ok((out, SolutionMap::affine(Problem::Densify, rat(size, 1), rat(c as i64, 1))))
}
