//! The constructors encode one another: covers as inductive predicates,
//! positivity as coinductive predicates on a sub-carrier, rule sets as
//! indexed containers, and confutability as derivability.

use cofix::encodings::{
    conf_as_der, container_of_ruleset, cover_via_enlargement, enlarge, positivity_via_restriction,
    restrict, ruleset_of_container,
};
use cofix::fixpoint::{cover, positivity};
use cofix::operators::{conf, der_container};
use cofix::{fixtures, Predicate};

fn main() -> cofix::Result<()> {
    let r = fixtures::r2();
    let v = Predicate::from_atoms(r.carrier(), ["c"])?;

    let big = enlarge(&r, &v)?;
    println!(
        "enlarged rules of c: {:?}",
        big.rules_of_atom("c")?
            .iter()
            .map(|x| &x.id)
            .collect::<Vec<_>>()
    );
    println!(
        "cover {} = ind of enlargement {}",
        cover(&r, &v)?,
        cover_via_enlargement(&r, &v)?
    );

    let bc = Predicate::from_atoms(r.carrier(), ["b", "c"])?;
    let small = restrict(&r, &bc)?;
    println!("restricted carrier: {:?}", small.carrier().elements());
    println!(
        "positivity {} = via restriction {}",
        positivity(&r, &bc)?,
        positivity_via_restriction(&r, &bc)?
    );

    let k = container_of_ruleset(&r);
    println!(
        "container round trip is identity: {}",
        ruleset_of_container(&k) == r
    );

    let choices = conf_as_der(&r)?;
    for x in 0..r.carrier().len() {
        let ids: Vec<_> = choices
            .options_of(x)
            .iter()
            .map(|o| o.id.to_string())
            .collect();
        println!("choice options at {}: {ids:?}", r.carrier().atom(x));
    }
    for p in Predicate::all(r.carrier()) {
        assert_eq!(conf(&r, &p)?, der_container(&choices, &p)?);
    }
    println!("conf = der over choice functions on all 8 predicates");
    Ok(())
}
