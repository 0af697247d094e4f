use super::{add_pendants, Problem, SolutionMap};
use crate::error::{Error, Result};
use crate::gadget::{self, ExpanderizedGraph, GadgetParams};
use crate::graph::Graph;
use crate::ratio::rat;

/// Plain gadget with a pendant on every L∪R vertex. The pendants force each gadget
/// vertex to be matched (or covered) on its own, adding exactly 2N to both values.
fn pendant_gadget(g: &Graph) -> Result<ExpanderizedGraph> {
    let mut x = gadget::build_core_gadget(g, GadgetParams::plain())?;
    let hosts: Vec<usize> = x.l_vertices().chain(x.r_vertices()).collect();
    add_pendants(&mut x, "pendants", &hosts);
    // a pendant raises an L/R degree by one against at least three gadget edges
    x.conductance_claim = x.conductance_claim.map(|c| c * rat(3, 5));
    Ok(x)
}

pub fn wter_matching(g: &Graph) -> Result<(ExpanderizedGraph, SolutionMap)> {
    let x = pendant_gadget(g)?;
    let map = SolutionMap::offset(Problem::Matching, 2 * x.n_side);
    Ok((x, map))
}

/// Same output as [`wter_matching`]; the minimum vertex cover also grows by 2N.
pub fn wter_vertex_cover(g: &Graph) -> Result<(ExpanderizedGraph, SolutionMap)> {
    let x = pendant_gadget(g)?;
    let map = SolutionMap::offset(Problem::VertexCover, 2 * x.n_side);
    Ok((x, map))
}

/// Bipartiteness-preserving gadget with pendants on L∪R. `sides` defaults to a
/// 2-colouring of `g`. Returns the output graph's 2-colouring alongside it.
pub fn wter_bipartite_perfect_matching(
    g: &Graph,
    sides: Option<&[bool]>,
) -> Result<(ExpanderizedGraph, Vec<bool>, SolutionMap)> {
    let sides = match sides {
        Some(s) => s.to_vec(),
        None => g.two_coloring().ok_or(Error::NotBipartite)?,
    };
    let b = sides.iter().filter(|&&s| s).count();
    if 2 * b != g.vertex_count() {
        return Err(Error::UnequalParts(g.vertex_count() - b, b));
    }
    let mut x = gadget::build_bipartite_core_gadget(g, &sides)?;
    let mut out_sides = gadget::bipartite_sides(&x, &sides);
    let hosts: Vec<usize> = x.l_vertices().chain(x.r_vertices()).collect();
    add_pendants(&mut x, "pendants", &hosts);
    let pendant_sides: Vec<bool> = hosts.iter().map(|&h| !out_sides[h]).collect();
    out_sides.extend(pendant_sides);
    x.conductance_claim = x.conductance_claim.map(|c| c * rat(3, 5));
    Ok((x, out_sides, SolutionMap::identity(Problem::BipartitePerfectMatching)))
}
