//! Cross-checks the iterative solver against brute force over every subset
//! of the carrier, on a batch of seeded random rule sets.

use cofix::fixpoint::{coind_predicate, ind_predicate, oracle_gfp, oracle_lfp};
use cofix::fixtures::random_ruleset;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> cofix::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut agreed = 0;
    for _ in 0..200 {
        let r = random_ruleset(&mut rng, 6);
        assert_eq!(oracle_lfp(&r, None)?, ind_predicate(&r));
        assert_eq!(oracle_gfp(&r, None)?, coind_predicate(&r));
        agreed += 1;
    }
    println!("solver and oracle agree on {agreed} random rule sets");

    // The oracle refuses carriers past its bound instead of running for ages.
    let big = cofix::fixtures::r3();
    match cofix::fixpoint::oracle_lfp_bounded(&big, None, 5) {
        Err(e) => println!("bounded oracle on {} elements: {e}", big.carrier().len()),
        Ok(p) => println!("unexpected result {p}"),
    }
    Ok(())
}
