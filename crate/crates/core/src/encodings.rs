//! Executable inter-encodings between the constructors.
//!
//! * [`enlarge`] turns a cover `◁ V` into an inductive predicate by adding a
//!   premise-free rule at every member of `V`.
//! * [`restrict`] turns a positivity relation `⋉ V` into a coinductive
//!   predicate on the sub-carrier `V`.
//! * [`container_of_ruleset`] / [`ruleset_of_container`] move between the
//!   rule-set and `Br`/`ar` presentations of the same operator.
//! * [`conf_as_der`] presents `conf(r, ·)` as a derivability operator whose
//!   options are choice functions.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixpoint::{coind_predicate, ind_predicate};
use crate::proofobjects::{
    check_cover_proof, check_derivation, dw_sup, CoverProof, DWTree, DerivationTree,
};
use crate::ruleset::{
    Atom, Branch, Carrier, ContainerOption, IndexedContainer, Predicate, Rule, RuleSet,
};

/// Rule id of the reflexivity axiom added by [`enlarge`] (the left summand).
pub const V_AXIOM: &str = "v:rf";
/// Prefix tagging original rules inside an enlarged rule set (the right summand).
pub const ORIGINAL_PREFIX: &str = "r:";
/// Default cap on choice functions per element in [`conf_as_der`].
pub const DEFAULT_CHOICE_CAP: usize = 4096;

fn tagged(id: &Atom) -> Atom {
    Atom::new(format!("{ORIGINAL_PREFIX}{id}"))
}

/// Every `x ε V` gains a premise-free rule [`V_AXIOM`]; original rules are
/// kept under the [`ORIGINAL_PREFIX`] namespace.
pub fn enlarge(r: &RuleSet, v: &Predicate) -> Result<RuleSet> {
    r.check(v)?;
    let carrier = r.carrier();
    let rules = (0..carrier.len())
        .map(|x| {
            let axiom = v.contains(x).then(|| Rule {
                id: V_AXIOM.into(),
                premises: Predicate::empty(carrier),
            });
            axiom
                .into_iter()
                .chain(r.rules_of(x).iter().map(|rule| Rule {
                    id: tagged(&rule.id),
                    premises: rule.premises.clone(),
                }))
                .collect()
        })
        .collect();
    Ok(RuleSet::from_parts(carrier.clone(), rules))
}

/// `ind(enlarge(r, V))`, which equals `cover(r, V)`.
pub fn cover_via_enlargement(r: &RuleSet, v: &Predicate) -> Result<Predicate> {
    Ok(ind_predicate(&enlarge(r, v)?))
}

/// Maps `rf(a)` to `ind(a, v:rf, ∅)` and `tr(a, i, p)` to `ind(a, r:i, p)`.
pub fn translate_cover_proof(r: &RuleSet, v: &Predicate, p: &CoverProof) -> Result<DerivationTree> {
    check_cover_proof(r, v, p).map_err(Error::InvalidProof)?;
    fn go(p: &CoverProof) -> DerivationTree {
        match p {
            CoverProof::Rf { conclusion } => DerivationTree::leaf(conclusion, V_AXIOM),
            CoverProof::Tr {
                conclusion,
                rule,
                children,
            } => DerivationTree {
                conclusion: conclusion.clone(),
                rule: tagged(rule),
                children: children.iter().map(|(z, c)| (z.clone(), go(c))).collect(),
            },
        }
    }
    Ok(go(p))
}

/// Inverse of [`translate_cover_proof`] on derivations over `enlarge(r, V)`.
pub fn untranslate_derivation(
    r: &RuleSet,
    v: &Predicate,
    t: &DerivationTree,
) -> Result<CoverProof> {
    let big = enlarge(r, v)?;
    check_derivation(&big, t).map_err(Error::InvalidProof)?;
    fn go(t: &DerivationTree) -> CoverProof {
        if t.rule.as_str() == V_AXIOM {
            return CoverProof::Rf {
                conclusion: t.conclusion.clone(),
            };
        }
        let original = t
            .rule
            .as_str()
            .strip_prefix(ORIGINAL_PREFIX)
            .expect("checked against the enlarged rule set");
        CoverProof::Tr {
            conclusion: t.conclusion.clone(),
            rule: original.into(),
            children: t.children.iter().map(|(z, c)| (z.clone(), go(c))).collect(),
        }
    }
    Ok(go(t))
}

/// The sub-carrier `V` (in carrier order) with every rule kept and its
/// premises intersected with `V`.
pub fn restrict(r: &RuleSet, v: &Predicate) -> Result<RuleSet> {
    r.check(v)?;
    let members: Vec<usize> = v.members().collect();
    let sub = Carrier::new(members.iter().map(|&x| r.carrier().atom(x).clone()))?;
    let rules = members
        .iter()
        .map(|&x| {
            r.rules_of(x)
                .iter()
                .map(|rule| Rule {
                    id: rule.id.clone(),
                    premises: Predicate::from_fn(&sub, |j| rule.premises.contains(members[j])),
                })
                .collect()
        })
        .collect();
    Ok(RuleSet::from_parts(sub, rules))
}

/// The `V`-members of `coind(restrict(r, V))`, lifted back to `r`'s carrier;
/// equals `positivity(r, V)`.
pub fn positivity_via_restriction(r: &RuleSet, v: &Predicate) -> Result<Predicate> {
    let sub = restrict(r, v)?;
    let inner = coind_predicate(&sub);
    Predicate::from_atoms(r.carrier(), inner.sorted_atoms())
}

/// One option per rule; one branch per premise, named after and pointing at
/// that premise.
pub fn container_of_ruleset(r: &RuleSet) -> IndexedContainer {
    let carrier = r.carrier();
    let options = (0..carrier.len())
        .map(|x| {
            r.rules_of(x)
                .iter()
                .map(|rule| ContainerOption {
                    id: rule.id.clone(),
                    branches: rule
                        .premises
                        .members()
                        .map(|z| Branch {
                            id: carrier.atom(z).clone(),
                            target: z,
                        })
                        .collect(),
                })
                .collect()
        })
        .collect();
    IndexedContainer::from_parts(carrier.clone(), options)
}

/// One rule per option, with premises the image of the arity map. Repeated
/// arities collapse.
pub fn ruleset_of_container(k: &IndexedContainer) -> RuleSet {
    let carrier = k.carrier();
    let rules = (0..carrier.len())
        .map(|x| {
            k.options_of(x)
                .iter()
                .map(|o| Rule {
                    id: o.id.clone(),
                    premises: Predicate::from_fn(carrier, |z| {
                        o.branches.iter().any(|b| b.target == z)
                    }),
                })
                .collect()
        })
        .collect();
    RuleSet::from_parts(carrier.clone(), rules)
}

/// Options at `x` are the choice functions picking one premise per rule of
/// `x`; each option branches over the rules of `x`, with arity the chosen
/// premise. An axiom rule admits no choice, so its conclusion gets no
/// options at all.
pub fn conf_as_der(r: &RuleSet) -> Result<IndexedContainer> {
    conf_as_der_bounded(r, DEFAULT_CHOICE_CAP)
}

pub fn conf_as_der_bounded(r: &RuleSet, cap: usize) -> Result<IndexedContainer> {
    let carrier = r.carrier();
    let mut options = Vec::with_capacity(carrier.len());
    for x in 0..carrier.len() {
        let rules = r.rules_of(x);
        let count = rules
            .iter()
            .map(|rule| rule.premises.count())
            .try_fold(1usize, |acc, n| acc.checked_mul(n))
            .unwrap_or(usize::MAX);
        if count > cap {
            return Err(Error::BoundExceeded {
                what: "choice functions per element",
                limit: cap,
                actual: count,
            });
        }
        // Odometer over the premise lists, first rule varying slowest.
        let choices: Vec<Vec<usize>> = rules
            .iter()
            .map(|rule| rule.premises.members().collect())
            .collect();
        let mut opts = Vec::with_capacity(count);
        if count > 0 {
            let mut idx = vec![0usize; rules.len()];
            loop {
                let picked: Vec<(&Rule, usize)> = rules
                    .iter()
                    .zip(&idx)
                    .zip(&choices)
                    .map(|((rule, &k), cs)| (rule, cs[k]))
                    .collect();
                let id = picked
                    .iter()
                    .map(|(rule, z)| format!("{}={}", rule.id, carrier.atom(*z)))
                    .collect::<Vec<_>>()
                    .join(",");
                opts.push(ContainerOption {
                    id: Atom::new(format!("choice({id})")),
                    branches: picked
                        .iter()
                        .map(|(rule, z)| Branch {
                            id: rule.id.clone(),
                            target: *z,
                        })
                        .collect(),
                });
                if !advance(&mut idx, &choices) {
                    break;
                }
            }
        }
        options.push(opts);
    }
    Ok(IndexedContainer::from_parts(carrier.clone(), options))
}

// Odometer step, last position fastest; false once every combination is seen.
fn advance(idx: &mut [usize], choices: &[Vec<usize>]) -> bool {
    for pos in (0..idx.len()).rev() {
        idx[pos] += 1;
        if idx[pos] < choices[pos].len() {
            return true;
        }
        idx[pos] = 0;
    }
    false
}

/// A derivation over `r` read as a dependent W-tree over
/// `container_of_ruleset(r)`.
pub fn dwtree_of_derivation(r: &RuleSet, t: &DerivationTree) -> Result<DWTree> {
    check_derivation(r, t).map_err(Error::InvalidProof)?;
    let k = container_of_ruleset(r);
    fn go(k: &IndexedContainer, t: &DerivationTree) -> Result<DWTree> {
        let subtrees = t
            .children
            .iter()
            .map(|(z, c)| Ok((z.clone(), go(k, c)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        dw_sup(k, t.conclusion.as_str(), t.rule.as_str(), subtrees)
    }
    go(&k, t)
}

/// Inverse of [`dwtree_of_derivation`].
pub fn derivation_of_dwtree(t: &DWTree) -> DerivationTree {
    DerivationTree {
        conclusion: t.label().clone(),
        rule: t.option().clone(),
        children: t
            .subtrees()
            .iter()
            .map(|(z, c)| (z.clone(), derivation_of_dwtree(c)))
            .collect(),
    }
}

/// Inductive and coinductive predicates side by side, and whether they are
/// complementary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub ind: Predicate,
    pub coind: Predicate,
    pub complementary: bool,
}

pub fn complement_dual(r: &RuleSet) -> DualityReport {
    let ind = ind_predicate(r);
    let coind = coind_predicate(r);
    let complementary = ind.complement() == coind;
    DualityReport {
        ind,
        coind,
        complementary,
    }
}
