//! Canonical rule sets shared by the tests, examples and CLI golden files,
//! plus a seeded generator of small random rule sets.
//!
//! | name | carrier | rules |
//! |------|---------|-------|
//! | R0 | `a b c` | none |
//! | R1 | `a b c` | `a: r{b}`, `b: r{c}` |
//! | R2 | `a b c` | `a: ax{}`, `b: r{a}`, `c: r{b,c}` |
//! | R3 | binary lists of length ≤ 2 | Baire-space truncation |

use rand::Rng;

use crate::ruleset::{Predicate, RuleSet, RuleSetDef};

pub fn r0_def() -> RuleSetDef {
    RuleSetDef::new(["a", "b", "c"])
}

pub fn r1_def() -> RuleSetDef {
    RuleSetDef::new(["a", "b", "c"])
        .rule("a", "r", ["b"])
        .rule("b", "r", ["c"])
}

pub fn r2_def() -> RuleSetDef {
    RuleSetDef::new(["a", "b", "c"])
        .rule("a", "ax", Vec::<&str>::new())
        .rule("b", "r", ["a"])
        .rule("c", "r", ["b", "c"])
}

/// Binary lists of length at most 2, shortest first: `[]`, `[0]`, `[1]`,
/// `[00]`, `[01]`, `[10]`, `[11]`.
pub fn baire_lists() -> Vec<String> {
    let mut out = vec!["[]".to_owned()];
    let mut layer = vec![String::new()];
    for _ in 0..2 {
        layer = layer
            .iter()
            .flat_map(|s| ["0", "1"].map(|d| format!("{s}{d}")))
            .collect();
        out.extend(layer.iter().map(|s| format!("[{s}]")));
    }
    out
}

/// Baire-space axiom set truncated at depth 2.
///
/// A list shorter than 2 has an `extend` rule whose premises are its two
/// one-step extensions. Every list has a `prefix:<l>` rule with premises
/// `{l}` for each proper prefix `l`. Length-2 lists get no `extend` rule:
/// that is the truncation boundary.
pub fn r3_def() -> RuleSetDef {
    let lists = baire_lists();
    let mut def = RuleSetDef::new(lists.iter().map(String::as_str));
    for s in &lists {
        let digits = &s[1..s.len() - 1];
        if digits.len() < 2 {
            def = def.rule(
                s,
                "extend",
                [format!("[{digits}0]"), format!("[{digits}1]")],
            );
        }
        for k in 0..digits.len() {
            let prefix = format!("[{}]", &digits[..k]);
            def = def.rule(s, &format!("prefix:{prefix}"), [prefix.clone()]);
        }
    }
    def
}

pub fn r0() -> RuleSet {
    r0_def().build().expect("R0 is well-formed")
}

pub fn r1() -> RuleSet {
    r1_def().build().expect("R1 is well-formed")
}

pub fn r2() -> RuleSet {
    r2_def().build().expect("R2 is well-formed")
}

pub fn r3() -> RuleSet {
    r3_def().build().expect("R3 is well-formed")
}

/// The bar of all length-2 lists in R3's carrier.
pub fn r3_bar(r3: &RuleSet) -> Predicate {
    Predicate::from_fn(r3.carrier(), |i| r3.carrier().atom(i).as_str().len() == 4)
}

/// All four fixtures, named.
pub fn all() -> Vec<(&'static str, RuleSet)> {
    vec![("R0", r0()), ("R1", r1()), ("R2", r2()), ("R3", r3())]
}

/// A random rule set with between 1 and `max_elements` elements, up to three
/// rules per element and premises drawn independently per element.
pub fn random_ruleset<R: Rng + ?Sized>(rng: &mut R, max_elements: usize) -> RuleSet {
    let n = rng.gen_range(1..=max_elements.max(1));
    let carrier: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut def = RuleSetDef::new(carrier.iter().map(String::as_str));
    for a in &carrier {
        for k in 0..rng.gen_range(0..=3) {
            let premises: Vec<&str> = carrier
                .iter()
                .filter(|_| rng.gen_bool(0.4))
                .map(String::as_str)
                .collect();
            def = def.rule(a, &format!("r{k}"), premises);
        }
    }
    def.build().expect("generated rule sets are well-formed")
}
