//! Online matrix-vector queries answered as s-t distances on a fixed expander.

use expander_gadget::ratio::fmt;
use expander_gadget::wter;

fn main() -> expander_gadget::Result<()> {
    let m = vec![
        vec![true, false, false, true],
        vec![false, false, true, false],
        vec![false, true, false, false],
        vec![false, false, false, false],
    ];
    let mut inst = wter::omv_build(&m)?;
    println!(
        "{} vertices, s={} t={}, conductance claim {}",
        inst.graph.vertex_count(),
        inst.s,
        inst.t,
        fmt(inst.conductance_claim)
    );
    let queries = [
        ([true, false, false, false], [false, false, false, true]),
        ([false, false, false, true], [true, true, true, true]),
        ([false, true, true, false], [false, true, false, false]),
    ];
    for (u, v) in queries {
        let (ans, events) = inst.query(&u, &v)?;
        println!("u={u:?} v={v:?} -> {} ({} edge events, uMv={})", ans.as_str(), events.len(), inst.product(&u, &v));
    }
    Ok(())
}
