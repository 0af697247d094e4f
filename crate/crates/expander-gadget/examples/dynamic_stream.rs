//! Feeds random edge updates to the dynamic gadget and replays the emitted
//! G_exp event stream to check it reproduces the maintained graph.

use expander_gadget::dynamic::DynamicExpanderState;
use expander_gadget::io::{self, EdgeUpdate};
use expander_gadget::{cli, Graph};

fn main() -> expander_gadget::Result<()> {
    let g0 = Graph::cycle(12);
    let updates = cli::random_updates(&g0, 400, 7)?;
    let mut st = DynamicExpanderState::new(&g0)?;
    let mut log: Vec<EdgeUpdate> = st.snapshot_events().iter().map(|e| e.edge_update()).collect();
    for (i, up) in updates.iter().enumerate() {
        log.extend(st.apply(up)?.iter().map(|e| e.edge_update()));
        if (i + 1) % 100 == 0 {
            let a = st.amortization_report();
            println!(
                "after {:>3} updates: m={} events={} ratio={:.2} invariants={}",
                i + 1,
                st.graph().edge_count(),
                a.total_events_out,
                a.ratio,
                st.check_invariants().is_ok()
            );
        }
    }
    let c = st.counters();
    println!("UPDATE calls={} BALANCE calls={} RECOMPUTE calls={}", c.updates, c.balances, c.recomputes);
    let replayed = io::replay(st.gexp().vertex_count(), &log)?;
    println!("replay matches G_exp: {}", &replayed == st.gexp());
    Ok(())
}
