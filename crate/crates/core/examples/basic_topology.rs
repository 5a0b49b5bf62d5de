//! Basic-topology laws for the generated cover and positivity relation,
//! checked exhaustively over every (a, U, V).

use cofix::basictopology::{check_basic_topology, check_generated_axioms, Sampling};
use cofix::fixtures;

fn main() -> cofix::Result<()> {
    for (name, r) in fixtures::all() {
        let sampling = Sampling::default_for(&r);
        let report = check_basic_topology(&r, sampling)?;
        println!("{name} ({}): passed = {}", report.sampling, report.passed);
        for law in &report.laws {
            let tag = if law.gating { "" } else { " (informative)" };
            println!(
                "  {:<24} holds = {:<5} checked {}{tag}",
                format!("{:?}", law.law),
                law.holds,
                law.checked
            );
            if let Some(c) = law.counterexamples.first() {
                println!("    e.g. {c:?}");
            }
        }
        println!(
            "  generated axioms hold: {}",
            check_generated_axioms(&r)?.passed
        );
    }
    Ok(())
}
