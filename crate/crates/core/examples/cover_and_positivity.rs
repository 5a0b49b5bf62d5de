//! The generated cover `a ◁ V` and positivity relation `a ⋉ V` for every
//! subset `V` of a three-element carrier.

use cofix::fixpoint::{cover, positivity};
use cofix::{fixtures, Predicate};

fn main() -> cofix::Result<()> {
    let r = fixtures::r2();
    println!("{:<10} {:<10} {:<10}", "V", "cover", "positivity");
    for v in Predicate::all(r.carrier()) {
        let c = cover(&r, &v)?;
        let p = positivity(&r, &v)?;
        println!(
            "{:<10} {:<10} {:<10}",
            v.to_string(),
            c.to_string(),
            p.to_string()
        );
    }
    Ok(())
}
