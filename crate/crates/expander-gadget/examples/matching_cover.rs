//! Maximum matching, minimum vertex cover and bipartite perfect matching through
//! the pendant-augmented gadget.

use expander_gadget::oracle::{bipartite_perfect_matching, max_matching, min_vertex_cover};
use expander_gadget::{wter, Graph};

fn main() -> expander_gadget::Result<()> {
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6)])?;

    let (x, map) = wter::wter_matching(&g)?;
    let (a, b) = (max_matching(&g)?, max_matching(&x.graph)?);
    println!("matching: nu(G)={a} nu(G_exp)={b} offset={}", map.value);

    let (x, map) = wter::wter_vertex_cover(&g)?;
    let (a, b) = (min_vertex_cover(&g)?, min_vertex_cover(&x.graph)?);
    println!("vertex cover: tau(G)={a} tau(G_exp)={b} offset={}", map.value);

    let c6 = Graph::cycle(6);
    let (x, sides, _) = wter::wter_bipartite_perfect_matching(&c6, None)?;
    println!(
        "bpm: input {} output {} on {} vertices",
        bipartite_perfect_matching(&c6, &c6.two_coloring().unwrap())?,
        bipartite_perfect_matching(&x.graph, &sides)?,
        x.graph.vertex_count()
    );
    Ok(())
}
