//! Derivation trees and cover proofs: extraction, independent checking,
//! structural recursion and the JSON document form.

use std::collections::BTreeMap;

use cofix::cli::document::{emit, DerivationPayload, Kind};
use cofix::fixtures;
use cofix::proofobjects::{
    check_cover_proof, check_derivation, derive, derive_cover, eval_cover_recursor,
    eval_ind_recursor,
};
use cofix::{Atom, Predicate};

fn main() -> cofix::Result<()> {
    let r2 = fixtures::r2();
    let tree = derive(&r2, "b")?;
    println!(
        "derivation of b: size {}, depth {}",
        tree.size(),
        tree.depth()
    );
    println!("checker: {:?}", check_derivation(&r2, &tree));

    // Count rule applications with the eliminator.
    let nodes = eval_ind_recursor(&r2, &tree, |_, _, rs: BTreeMap<Atom, u32>| {
        1 + rs.values().sum::<u32>()
    })?;
    println!("rule applications: {nodes}");

    // `c` has no derivation at all.
    if let Err(e) = derive(&r2, "c") {
        println!("c: {e}");
    }

    // In R1 nothing is derivable, but everything is covered by {c}.
    let r1 = fixtures::r1();
    let v = Predicate::from_atoms(r1.carrier(), ["c"])?;
    let proof = derive_cover(&r1, &v, "a")?;
    println!("a ◁ {v}: {:?}", check_cover_proof(&r1, &v, &proof));
    let reflexive_leaves = eval_cover_recursor(
        &r1,
        &v,
        &proof,
        |_| 1u32,
        |_, _, rs: BTreeMap<Atom, u32>| rs.values().sum(),
    )?;
    println!("leaves closed by reflexivity: {reflexive_leaves}");

    let doc = DerivationPayload::Cover {
        v: v.sorted_atoms(),
        proof,
    };
    print!("{}", emit(Kind::Derivation, &doc));
    Ok(())
}
