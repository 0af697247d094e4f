//! Plain, tradeoff and bipartite gadgets on small graphs, with the exact conductance
//! of each result next to the claimed lower bound.

use expander_gadget::measure::exact_conductance;
use expander_gadget::ratio::{fmt, rat};
use expander_gadget::{gadget, GadgetParams, Graph};

fn main() -> expander_gadget::Result<()> {
    // Two triangles joined by a bridge: conductance 1/7.
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])?;
    println!("input: n={} m={} phi={}", g.vertex_count(), g.edge_count(), fmt(exact_conductance(&g)?.0));

    for (name, params) in
        [("plain", GadgetParams::plain()), ("tradeoff eps=1/2 delta=1", GadgetParams::tradeoff(rat(1, 2), rat(1, 1)))]
    {
        let x = gadget::build_core_gadget(&g, params)?;
        let r = x.report();
        println!(
            "{name}: N={} d_X={} alpha={} |V_exp|={} |E_exp|={} claim={}",
            r.n_side,
            r.d_x,
            fmt(r.alpha),
            x.graph.vertex_count(),
            x.graph.edge_count(),
            r.conductance_claim.map(fmt).unwrap_or_default()
        );
        println!("  robust preconditions: {}", x.check_robust_preconditions().all());
        println!("  spectral lower bound: {:.4}", expander_gadget::measure::spectral_conductance_lower_bound(&x.graph));
    }

    // A 4-cycle with sides {0, 2} and {1, 3}; the output keeps a bipartition.
    let c4 = Graph::cycle(4);
    let sides = c4.two_coloring().expect("even cycle");
    let x = gadget::build_bipartite_core_gadget(&c4, &sides)?;
    let out_sides = gadget::bipartite_sides(&x, &sides);
    println!(
        "bipartite: |V_exp|={} still bipartite: {} exact phi={}",
        x.graph.vertex_count(),
        x.graph.respects_bipartition(&out_sides),
        fmt(exact_conductance(&x.graph)?.0)
    );
    Ok(())
}
