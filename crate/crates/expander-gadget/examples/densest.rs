//! Densest subgraph on a dense random graph, before and after the reduction,
//! plus the densify variant that plants a clique.

use expander_gadget::oracle::densest;
use expander_gadget::ratio::fmt;
use expander_gadget::{cli, wter, Graph};

fn main() -> expander_gadget::Result<()> {
    let g = cli::random_graph(100, Some(4300), None, false, 5)?;
    let (x, map) = wter::wter_densest(&g)?;
    let a = densest(&g)?;
    let b = densest(&x.graph)?;
    println!("rho(G) = {} on {} vertices", fmt(a.density), a.vertices.len());
    println!("rho(G_exp) = {} (|V_exp| = {})", fmt(b.density), x.graph.vertex_count());
    println!("recovered = {}", fmt(map.recover(b.density)));

    let sparse = Graph::path(6);
    let (gc, map) = wter::wter_densify(&sparse, 3)?;
    let r = densest(&gc)?.density;
    println!("densify C=3: rho(G_C) = {} recovered rho(G) = {}", fmt(r), fmt(map.recover(r)));
    Ok(())
}
