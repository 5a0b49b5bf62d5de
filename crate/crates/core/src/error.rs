use thiserror::Error;

use crate::proofobjects::CheckFailure;
use crate::ruleset::{Atom, Violation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("predicates live over different carriers")]
    CarrierMismatch,

    #[error("duplicate carrier element `{0}`")]
    DuplicateElement(Atom),

    #[error("`{0}` is not an element of the carrier")]
    UnknownElement(Atom),

    #[error("element `{element}` has no rule `{rule}`")]
    UnknownRule { element: Atom, rule: Atom },

    #[error("element `{0}` has no rules to destruct")]
    NoRules(Atom),

    #[error("invalid rule set: {}", join_violations(.0))]
    InvalidRuleSet(Vec<Violation>),

    #[error("invalid container: {0}")]
    InvalidContainer(String),

    #[error("operator is not monotone: stage {stage} is not comparable with its predecessor")]
    NotMonotone { stage: usize },

    #[error("iteration did not stabilise within {steps} steps")]
    NonConvergent { steps: usize },

    #[error("{what} exceeds bound: {actual} > {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("`{0}` is underivable")]
    NotDerivable(Atom),

    #[error("`{0}` is not in the coinductive predicate")]
    NotCoinductive(Atom),

    #[error("trace does not match the rule set at `{0}`")]
    TraceMismatch(Atom),

    #[error("invalid proof object: {0}")]
    InvalidProof(CheckFailure),

    #[error("witness carries no positivity evidence")]
    NotPositivityWitness,

    #[error("tree construction failed: {0}")]
    TreeShape(String),
}

fn join_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
