//! Finite truncation of Baire space: binary lists of length at most two,
//! where the bar of all length-two lists covers the empty list.

use cofix::fixpoint::cover_trace;
use cofix::fixtures;
use cofix::proofobjects::derive_cover;

fn main() -> cofix::Result<()> {
    let r3 = fixtures::r3();
    let bar = fixtures::r3_bar(&r3);
    let trace = cover_trace(&r3, &bar)?;
    println!("bar: {bar}");
    for (k, stage) in trace.stages.iter().enumerate() {
        println!("stage {k}: {stage}");
    }
    println!("[] ◁ bar from stage {:?}", trace.rank_of("[]"));

    let proof = derive_cover(&r3, &bar, "[]")?;
    println!(
        "{}",
        serde_json::to_string_pretty(&proof).expect("proofs serialize")
    );
    Ok(())
}
