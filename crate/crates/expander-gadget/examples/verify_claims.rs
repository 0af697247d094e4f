//! Writes a gadget and its report, then checks the recorded claims the way
//! `xgadget verify` does.

use expander_gadget::report::{Check, RunReport};
use expander_gadget::verify::{check_claims, parse_claims, Subject};
use expander_gadget::{gadget, io, GadgetParams, Graph};
use serde_json::json;

fn main() -> expander_gadget::Result<()> {
    let g = Graph::path(5);
    let x = gadget::build_core_gadget(&g, GadgetParams::plain())?;
    let mut report = RunReport::new(&["example".to_string()]);
    report.result = json!(x.report());
    report.checks.push(Check::new("robust", x.check_robust_preconditions().all(), json!(null)));

    let subject = Subject::parse(&io::write_edge_list(&x.graph))?;
    let claims = parse_claims(&report.to_json())?;
    for c in check_claims(&subject, &claims, std::path::Path::new("."))? {
        println!("{:<40} {}", c.name, if c.passed { "ok" } else { "FAILED" });
    }
    Ok(())
}
