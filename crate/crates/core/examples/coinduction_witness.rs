//! Coinduction witnesses: a support set closed under one chosen premise per
//! rule, unfolded step by step with `des`.

use cofix::fixtures;
use cofix::proofobjects::{build_coind_witness, verify_coind_witness};
use cofix::Predicate;

fn main() -> cofix::Result<()> {
    let r3 = fixtures::r3();
    let mut w = build_coind_witness(&r3, "[]", None)?;
    println!("support: {:?}", w.support);
    println!("valid: {:?}", verify_coind_witness(&r3, &w));

    // Follow the `extend` rule as deep as the truncation allows, then fall
    // back along prefixes.
    for _ in 0..4 {
        let rules: Vec<_> = r3
            .rules_of_atom(w.start.as_str())?
            .iter()
            .map(|r| r.id.clone())
            .collect();
        let rule = rules
            .iter()
            .find(|id| id.as_str() == "extend")
            .unwrap_or(&rules[0]);
        let (z, next) = w.des(rule.as_str())?;
        println!("{} --{rule}--> {z}", w.start);
        w = next;
    }

    // A positivity witness also certifies membership in V.
    let r2 = fixtures::r2();
    let v = Predicate::from_atoms(r2.carrier(), ["b", "c"])?;
    let pw = build_coind_witness(&r2, "c", Some(&v))?;
    println!(
        "c ⋉ {v}: {:?}, corf gives {:?}",
        verify_coind_witness(&r2, &pw),
        pw.corf()?
    );
    match build_coind_witness(&r2, "b", Some(&v)) {
        Err(e) => println!("b: {e}"),
        Ok(_) => println!("b unexpectedly positive"),
    }
    Ok(())
}
