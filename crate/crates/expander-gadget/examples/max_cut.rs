//! Max-Cut through the expander reduction, recovered with the additive offset.

use expander_gadget::oracle::max_cut;
use expander_gadget::ratio::{fmt, rat};
use expander_gadget::{wter, Graph};

fn main() -> expander_gadget::Result<()> {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])?;
    let (x, map) = wter::wter_max_cut(&g, rat(1, 1))?;
    let direct = max_cut(&g)?;
    let through = max_cut(&x.graph)?;
    println!("MC(G) = {direct}");
    println!("MC(G_exp) = {through} on {} vertices", x.graph.vertex_count());
    println!("map: {}", serde_json::to_string(&map).unwrap());
    println!("recovered = {}", fmt(map.recover(rat(through as i64, 1))));
    Ok(())
}
