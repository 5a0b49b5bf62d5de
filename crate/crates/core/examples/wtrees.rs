//! Wellfounded trees over a plain signature and dependent W-trees over an
//! indexed container, with their recursors.

use std::collections::BTreeMap;

use cofix::encodings::{container_of_ruleset, dwtree_of_derivation};
use cofix::proofobjects::{derive, dw_recursor, wtree_recursor, wtree_sup, Signature};
use cofix::{fixtures, Atom};

fn main() -> cofix::Result<()> {
    let sig = Signature::binary_tree();
    let leaf = || wtree_sup(&sig, "leaf", BTreeMap::new());
    let node = |l, r| {
        wtree_sup(
            &sig,
            "node",
            BTreeMap::from([(Atom::from("L"), l), (Atom::from("R"), r)]),
        )
    };
    let t = node(leaf()?, node(leaf()?, leaf()?)?)?;

    let leaves = wtree_recursor(&t, &mut |label: &Atom, _: &_, rs: BTreeMap<Atom, u32>| {
        if label.as_str() == "leaf" {
            1
        } else {
            rs.values().sum()
        }
    });
    println!("leaves: {leaves}");

    // A node missing its right branch is refused.
    let bad = wtree_sup(&sig, "node", BTreeMap::from([(Atom::from("L"), leaf()?)]));
    println!("partial node: {}", bad.unwrap_err());

    // Derivations are dependent W-trees over the rule set's container.
    let r2 = fixtures::r2();
    let k = container_of_ruleset(&r2);
    let dw = dwtree_of_derivation(&r2, &derive(&r2, "b")?)?;
    let path = dw_recursor(
        &dw,
        &mut |a: &Atom, i: &Atom, _: &_, rs: BTreeMap<Atom, String>| {
            let below: Vec<_> = rs.into_values().collect();
            format!("{a}/{i}[{}]", below.join(","))
        },
    );
    println!("dependent tree: {path}");
    println!("coherent: {:?}", cofix::proofobjects::check_dwtree(&k, &dw));
    Ok(())
}
