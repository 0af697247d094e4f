//! Hitting-set based reductions for max clique and dominating set.

use expander_gadget::oracle::{max_clique, min_dominating_set};
use expander_gadget::ratio::{fmt, rat};
use expander_gadget::{wter, Graph};

fn main() -> expander_gadget::Result<()> {
    let g = Graph::cycle(8);
    let eps = rat(1, 4);
    let q = wter::build_hitting_set(&g, eps)?;
    println!("Q = {q:?} (quality {:.4})", wter::hitting_quality(eps));
    println!("cut condition violated: {}", wter::hitting_cut_violation(&g, &q, eps)?.is_some());

    let (x, map) = wter::wter_max_clique(&g, eps)?;
    println!("omega(G)={} omega(G_exp)={} map={:?}", max_clique(&g)?, max_clique(&x.graph)?, map.kind);

    let (x, map) = wter::wter_dominating_set(&g, eps)?;
    let (a, b) = (min_dominating_set(&g)?, min_dominating_set(&x.graph)?);
    println!("gamma(G)={a} gamma(G_exp)={b} recovered={}", fmt(map.recover(rat(b as i64, 1))));
    Ok(())
}
