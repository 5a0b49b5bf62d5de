//! Least and greatest fixed points of a small rule set, with the Kleene
//! iterates that produced them.
//!
//! ```text
//! cargo run --example solve_fixpoints
//! ```

use cofix::fixpoint::{coind_trace, ind_trace, FixpointTrace};
use cofix::RuleSetDef;

fn show(name: &str, t: &FixpointTrace) {
    println!("{name} = {}", t.result());
    for (k, stage) in t.stages.iter().enumerate() {
        println!("  stage {k}: {stage}");
    }
}

fn main() -> cofix::Result<()> {
    // `a` is an axiom, `b` follows from `a`, and `c` only from itself and `b`.
    let r = RuleSetDef::new(["a", "b", "c"])
        .rule("a", "ax", Vec::<&str>::new())
        .rule("b", "r", ["a"])
        .rule("c", "r", ["b", "c"])
        .build()?;

    let ind = ind_trace(&r);
    let coind = coind_trace(&r);
    show("ind", &ind);
    show("coind", &coind);

    for a in r.carrier().elements() {
        println!("rank of {a} in ind: {:?}", ind.rank_of(a.as_str()));
    }
    println!(
        "complementary: {}",
        ind.result().complement() == *coind.result()
    );
    Ok(())
}
