//! k-clique counting scaled by k + 1, and H-subgraph detection on subdivided gadgets.

use expander_gadget::oracle::{count_k_cliques, subgraph_iso};
use expander_gadget::{wter, Graph};

fn main() -> expander_gadget::Result<()> {
    let g = Graph::complete(5);
    for k in 3..=4 {
        let (x, map) = wter::wter_k_clique(&g, k)?;
        println!(
            "k={k}: #K{k}(G)={} #K{k}(G_exp)={} factor={}",
            count_k_cliques(&g, k)?,
            count_k_cliques(&x.graph, k)?,
            map.value
        );
    }

    let triangle = Graph::complete(3);
    for (name, host) in [("C5", Graph::cycle(5)), ("K4", Graph::complete(4))] {
        let (inst, _) = wter::wter_h_subgraph(&host, &triangle)?;
        println!(
            "{name}: contains triangle {} / after reduction {} (path_len {})",
            subgraph_iso(&host, &triangle)?,
            subgraph_iso(&inst.graph, &triangle)?,
            inst.path_len
        );
    }
    Ok(())
}
