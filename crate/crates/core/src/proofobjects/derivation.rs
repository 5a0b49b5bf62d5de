use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::CheckFailure;
use crate::error::{Error, Result};
use crate::fixpoint::{cover_trace, ind_trace, FixpointKind, FixpointTrace};
use crate::ruleset::{Atom, Predicate, RuleSet};

/// A finite derivation `ind(a, i, p)`: the conclusion, the rule applied, and
/// one subderivation per premise of that rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DerivationTree {
    pub conclusion: Atom,
    pub rule: Atom,
    pub children: BTreeMap<Atom, DerivationTree>,
}

impl DerivationTree {
    pub fn leaf(conclusion: impl Into<Atom>, rule: impl Into<Atom>) -> Self {
        DerivationTree {
            conclusion: conclusion.into(),
            rule: rule.into(),
            children: BTreeMap::new(),
        }
    }

    /// Structural fold; no validity check.
    pub fn fold<T, F>(&self, step: &mut F) -> T
    where
        F: FnMut(&Atom, &Atom, BTreeMap<Atom, T>) -> T,
    {
        let results = self
            .children
            .iter()
            .map(|(z, child)| (z.clone(), child.fold(step)))
            .collect();
        step(&self.conclusion, &self.rule, results)
    }

    pub fn size(&self) -> usize {
        self.fold(&mut |_, _, rs: BTreeMap<Atom, usize>| 1 + rs.values().sum::<usize>())
    }

    pub fn depth(&self) -> usize {
        self.fold(&mut |_, _, rs: BTreeMap<Atom, usize>| {
            1 + rs.values().copied().max().unwrap_or(0)
        })
    }
}

/// A proof of `a ◁ V`: either reflexivity from `a ε V`, or a rule of `a`
/// together with cover proofs of each premise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum CoverProof {
    Rf {
        conclusion: Atom,
    },
    Tr {
        conclusion: Atom,
        rule: Atom,
        children: BTreeMap<Atom, CoverProof>,
    },
}

impl CoverProof {
    pub fn conclusion(&self) -> &Atom {
        match self {
            CoverProof::Rf { conclusion } | CoverProof::Tr { conclusion, .. } => conclusion,
        }
    }

    /// Structural fold: `rf` nodes go to `q1`, `tr` nodes to `q2` with the
    /// recursive results on the premises.
    pub fn fold<T, Q1, Q2>(&self, q1: &mut Q1, q2: &mut Q2) -> T
    where
        Q1: FnMut(&Atom) -> T,
        Q2: FnMut(&Atom, &Atom, BTreeMap<Atom, T>) -> T,
    {
        match self {
            CoverProof::Rf { conclusion } => q1(conclusion),
            CoverProof::Tr {
                conclusion,
                rule,
                children,
            } => {
                let results = children
                    .iter()
                    .map(|(z, child)| (z.clone(), child.fold(q1, q2)))
                    .collect();
                q2(conclusion, rule, results)
            }
        }
    }
}

fn check_trace(r: &RuleSet, trace: &FixpointTrace) -> Result<()> {
    if trace.kind != FixpointKind::Least {
        return Err(Error::TraceMismatch(Atom::from(
            "<greatest fixed point trace>",
        )));
    }
    r.check(trace.result())
}

// First rule of `x` (declaration order) whose premises all entered the
// trace strictly before `x` did.
fn pick_rule<'r>(
    r: &'r RuleSet,
    trace: &FixpointTrace,
    x: usize,
) -> Result<&'r crate::ruleset::Rule> {
    let atom = r.carrier().atom(x);
    let k = trace.rank[x].ok_or_else(|| Error::NotDerivable(atom.clone()))?;
    r.rules_of(x)
        .iter()
        .find(|rule| {
            rule.premises
                .members()
                .all(|z| trace.rank[z].is_some_and(|rz| rz < k))
        })
        .ok_or_else(|| Error::TraceMismatch(atom.clone()))
}

/// Reads a derivation of `a` off a least-fixed-point trace of `der(r, ·)`.
pub fn extract_derivation(r: &RuleSet, a: &str, trace: &FixpointTrace) -> Result<DerivationTree> {
    check_trace(r, trace)?;
    let x = r.carrier().require(a)?;
    extract_at(r, trace, x)
}

fn extract_at(r: &RuleSet, trace: &FixpointTrace, x: usize) -> Result<DerivationTree> {
    let rule = pick_rule(r, trace, x)?;
    let children = rule
        .premises
        .members()
        .map(|z| Ok((r.carrier().atom(z).clone(), extract_at(r, trace, z)?)))
        .collect::<Result<_>>()?;
    Ok(DerivationTree {
        conclusion: r.carrier().atom(x).clone(),
        rule: rule.id.clone(),
        children,
    })
}

/// Reads a cover proof of `a ◁ V` off a trace of `der_v(r, V, ·)`.
/// Members of `V` always get `rf`.
pub fn extract_cover_proof(
    r: &RuleSet,
    v: &Predicate,
    a: &str,
    trace: &FixpointTrace,
) -> Result<CoverProof> {
    check_trace(r, trace)?;
    r.check(v)?;
    let x = r.carrier().require(a)?;
    extract_cover_at(r, v, trace, x)
}

fn extract_cover_at(
    r: &RuleSet,
    v: &Predicate,
    trace: &FixpointTrace,
    x: usize,
) -> Result<CoverProof> {
    let conclusion = r.carrier().atom(x).clone();
    if v.contains(x) {
        if trace.rank[x].is_none() {
            return Err(Error::TraceMismatch(conclusion));
        }
        return Ok(CoverProof::Rf { conclusion });
    }
    let rule = pick_rule(r, trace, x)?;
    let children = rule
        .premises
        .members()
        .map(|z| {
            Ok((
                r.carrier().atom(z).clone(),
                extract_cover_at(r, v, trace, z)?,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(CoverProof::Tr {
        conclusion,
        rule: rule.id.clone(),
        children,
    })
}

/// Solves `ind(r)` and extracts a derivation of `a`.
pub fn derive(r: &RuleSet, a: &str) -> Result<DerivationTree> {
    extract_derivation(r, a, &ind_trace(r))
}

/// Solves `cover(r, V)` and extracts a cover proof of `a ◁ V`.
pub fn derive_cover(r: &RuleSet, v: &Predicate, a: &str) -> Result<CoverProof> {
    extract_cover_proof(r, v, a, &cover_trace(r, v)?)
}

fn check_node<'t, C>(
    r: &RuleSet,
    path: &mut Vec<Atom>,
    conclusion: &Atom,
    rule: &Atom,
    children: &'t BTreeMap<Atom, C>,
    child_conclusion: impl Fn(&C) -> &Atom,
    mut recurse: impl FnMut(&mut Vec<Atom>, &'t C) -> Result<(), CheckFailure>,
) -> Result<(), CheckFailure> {
    path.push(conclusion.clone());
    let Some(x) = r.carrier().position(conclusion.as_str()) else {
        return Err(CheckFailure::new(
            path,
            format!("`{conclusion}` is not in the carrier"),
        ));
    };
    let Some(found) = r.rules_of(x).iter().find(|ru| ru.id == *rule) else {
        return Err(CheckFailure::new(
            path,
            format!("`{conclusion}` has no rule `{rule}`"),
        ));
    };
    let expected = found.premises.atom_set();
    let given: BTreeSet<Atom> = children.keys().cloned().collect();
    if expected != given {
        let fmt = |s: &BTreeSet<Atom>| s.iter().map(Atom::as_str).collect::<Vec<_>>().join(",");
        return Err(CheckFailure::new(
            path,
            format!(
                "rule `{rule}` has premises {{{}}} but children are {{{}}}",
                fmt(&expected),
                fmt(&given)
            ),
        ));
    }
    for (z, child) in children {
        let cz = child_conclusion(child);
        if cz != z {
            return Err(CheckFailure::new(
                path,
                format!("child under premise `{z}` concludes `{cz}`"),
            ));
        }
        recurse(path, child)?;
    }
    path.pop();
    Ok(())
}

/// Checks that every node applies a real rule to exactly its premises.
pub fn check_derivation(r: &RuleSet, t: &DerivationTree) -> Result<(), CheckFailure> {
    fn go(r: &RuleSet, path: &mut Vec<Atom>, t: &DerivationTree) -> Result<(), CheckFailure> {
        check_node(
            r,
            path,
            &t.conclusion,
            &t.rule,
            &t.children,
            |c| &c.conclusion,
            |p, c| go(r, p, c),
        )
    }
    go(r, &mut Vec::new(), t)
}

/// As [`check_derivation`], with `rf` nodes requiring membership in `V`.
pub fn check_cover_proof(r: &RuleSet, v: &Predicate, p: &CoverProof) -> Result<(), CheckFailure> {
    if r.check(v).is_err() {
        return Err(CheckFailure::new(&[], "V is over a different carrier"));
    }
    fn go(
        r: &RuleSet,
        v: &Predicate,
        path: &mut Vec<Atom>,
        p: &CoverProof,
    ) -> Result<(), CheckFailure> {
        match p {
            CoverProof::Rf { conclusion } => {
                path.push(conclusion.clone());
                if r.carrier().position(conclusion.as_str()).is_none() {
                    return Err(CheckFailure::new(
                        path,
                        format!("`{conclusion}` is not in the carrier"),
                    ));
                }
                if !v.contains_atom(conclusion.as_str()) {
                    return Err(CheckFailure::new(
                        path,
                        format!("rf at `{conclusion}`, which is not in V"),
                    ));
                }
                path.pop();
                Ok(())
            }
            CoverProof::Tr {
                conclusion,
                rule,
                children,
            } => check_node(
                r,
                path,
                conclusion,
                rule,
                children,
                CoverProof::conclusion,
                |pa, c| go(r, v, pa, c),
            ),
        }
    }
    go(r, v, &mut Vec::new(), p)
}

/// The eliminator of the inductive predicate, run on a checked tree.
pub fn eval_ind_recursor<T, F>(r: &RuleSet, t: &DerivationTree, mut step: F) -> Result<T>
where
    F: FnMut(&Atom, &Atom, BTreeMap<Atom, T>) -> T,
{
    check_derivation(r, t).map_err(Error::InvalidProof)?;
    Ok(t.fold(&mut step))
}

/// The eliminator of the generated cover, run on a checked proof.
pub fn eval_cover_recursor<T, Q1, Q2>(
    r: &RuleSet,
    v: &Predicate,
    p: &CoverProof,
    mut q1: Q1,
    mut q2: Q2,
) -> Result<T>
where
    Q1: FnMut(&Atom) -> T,
    Q2: FnMut(&Atom, &Atom, BTreeMap<Atom, T>) -> T,
{
    check_cover_proof(r, v, p).map_err(Error::InvalidProof)?;
    Ok(p.fold(&mut q1, &mut q2))
}
