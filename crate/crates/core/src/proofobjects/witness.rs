use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::CheckFailure;
use crate::error::{Error, Result};
use crate::fixpoint::{coind_predicate, positivity};
use crate::ruleset::{Atom, Predicate, RuleSet};

/// A finite coinduction certificate: a consistent `support` containing
/// `start`, and for each supported element and each of its rules a chosen
/// premise that is itself supported.
///
/// When `v` is present the witness proves `start ⋉ V` and the support must
/// lie inside `V`; otherwise it proves membership in the coinductive
/// predicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoinductionWitness {
    pub start: Atom,
    pub support: BTreeSet<Atom>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<BTreeSet<Atom>>,
    pub continuations: BTreeMap<Atom, BTreeMap<Atom, Atom>>,
}

/// Evidence that `element ε V` for a positivity witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VMembership {
    pub element: Atom,
}

/// Evidence that `premise ε C(conclusion, rule)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PremiseEvidence {
    pub conclusion: Atom,
    pub rule: Atom,
    pub premise: Atom,
}

impl CoinductionWitness {
    fn rerooted(&self, at: &Atom) -> CoinductionWitness {
        CoinductionWitness {
            start: at.clone(),
            ..self.clone()
        }
    }

    fn continuation(&self, rule: &str) -> Result<&Atom> {
        let rules = self.continuations.get(&self.start);
        match rules {
            None => Err(Error::NoRules(self.start.clone())),
            Some(m) if m.is_empty() => Err(Error::NoRules(self.start.clone())),
            Some(m) => m.get(rule).ok_or_else(|| Error::UnknownRule {
                element: self.start.clone(),
                rule: rule.into(),
            }),
        }
    }

    /// One unfolding step along `rule`: the chosen premise and the witness
    /// re-rooted there. Only meaningful on a verified witness.
    pub fn des(&self, rule: &str) -> Result<(Atom, CoinductionWitness)> {
        let z = self.continuation(rule)?;
        Ok((z.clone(), self.rerooted(z)))
    }

    /// The `V`-membership of the start element.
    pub fn corf(&self) -> Result<VMembership> {
        let v = self.v.as_ref().ok_or(Error::NotPositivityWitness)?;
        if !v.contains(&self.start) {
            return Err(Error::NotPositivityWitness);
        }
        Ok(VMembership {
            element: self.start.clone(),
        })
    }

    /// As [`des`](Self::des), also returning the premise-membership evidence.
    pub fn cotr(&self, rule: &str) -> Result<(PremiseEvidence, CoinductionWitness)> {
        let z = self.continuation(rule)?;
        let evidence = PremiseEvidence {
            conclusion: self.start.clone(),
            rule: rule.into(),
            premise: z.clone(),
        };
        Ok((evidence, self.rerooted(z)))
    }
}

/// Builds the canonical witness for `a`: support is the whole coinductive
/// predicate (or `⋉ V`), each continuation the first supported premise in
/// carrier order.
pub fn build_coind_witness(
    r: &RuleSet,
    a: &str,
    v: Option<&Predicate>,
) -> Result<CoinductionWitness> {
    let support = match v {
        Some(v) => positivity(r, v)?,
        None => coind_predicate(r),
    };
    let x = r.carrier().require(a)?;
    if !support.contains(x) {
        return Err(Error::NotCoinductive(a.into()));
    }
    let mut continuations = BTreeMap::new();
    for y in support.members() {
        let chosen = r
            .rules_of(y)
            .iter()
            .map(|rule| {
                let z = rule
                    .premises
                    .members()
                    .find(|&z| support.contains(z))
                    .expect("support is consistent");
                (rule.id.clone(), r.carrier().atom(z).clone())
            })
            .collect();
        continuations.insert(r.carrier().atom(y).clone(), chosen);
    }
    Ok(CoinductionWitness {
        start: a.into(),
        support: support.atom_set(),
        v: v.map(Predicate::atom_set),
        continuations,
    })
}

/// Checks every witness invariant against `r`. A witness that passes proves
/// its start element is in the coinductive predicate (or `⋉ V`).
pub fn verify_coind_witness(r: &RuleSet, w: &CoinductionWitness) -> Result<(), CheckFailure> {
    let fail = |at: &Atom, why: String| Err(CheckFailure::new(std::slice::from_ref(at), why));
    for x in &w.support {
        if r.carrier().position(x.as_str()).is_none() {
            return fail(x, format!("support element `{x}` is not in the carrier"));
        }
    }
    if let Some(v) = &w.v {
        for x in v {
            if r.carrier().position(x.as_str()).is_none() {
                return fail(x, format!("V element `{x}` is not in the carrier"));
            }
        }
        if let Some(x) = w.support.difference(v).next() {
            return fail(x, format!("support element `{x}` is not in V"));
        }
    }
    if !w.support.contains(&w.start) {
        return fail(
            &w.start,
            format!("start `{}` is not in the support", w.start),
        );
    }
    for x in w.continuations.keys() {
        if !w.support.contains(x) {
            return fail(x, format!("continuations given for unsupported `{x}`"));
        }
    }
    let empty = BTreeMap::new();
    for x in &w.support {
        let rules = r.rules_of_atom(x.as_str()).expect("checked above");
        let chosen = w.continuations.get(x).unwrap_or(&empty);
        for id in chosen.keys() {
            if !rules.iter().any(|ru| ru.id == *id) {
                return fail(x, format!("continuation for unknown rule `{id}`"));
            }
        }
        for rule in rules {
            let Some(z) = chosen.get(&rule.id) else {
                return fail(x, format!("no continuation for rule `{}`", rule.id));
            };
            if !rule.premises.contains_atom(z.as_str()) {
                return fail(x, format!("`{z}` is not a premise of rule `{}`", rule.id));
            }
            if !w.support.contains(z) {
                return fail(
                    x,
                    format!(
                        "continuation `{z}` of rule `{}` leaves the support",
                        rule.id
                    ),
                );
            }
        }
    }
    Ok(())
}
