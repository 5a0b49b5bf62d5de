//! Carriers, decidable predicates, rule sets and indexed containers.
//!
//! Everything here is immutable once built. A [`RuleSet`] or
//! [`IndexedContainer`] is obtained from its serializable definition
//! ([`RuleSetDef`], [`ContainerDef`]) after validation, so that invariant
//! violations stay data until someone asks for a checked value.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An opaque identifier: carrier elements, rule ids, option and branch ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Atom(String);

impl Atom {
    pub fn new(s: impl Into<String>) -> Self {
        Atom(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Self {
        Atom(s.to_owned())
    }
}

impl From<String> for Atom {
    fn from(s: String) -> Self {
        Atom(s)
    }
}

impl From<&Atom> for Atom {
    fn from(a: &Atom) -> Self {
        a.clone()
    }
}

impl Borrow<str> for Atom {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Atom {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// A finite, ordered set of distinct atoms. Order is declaration order.
#[derive(Clone)]
pub struct Carrier {
    elements: Vec<Atom>,
    positions: HashMap<Atom, usize>,
}

impl Carrier {
    pub fn new<I, S>(elements: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<Atom>,
    {
        let elements: Vec<Atom> = elements.into_iter().map(Into::into).collect();
        let mut positions = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if positions.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateElement(e.clone()));
            }
        }
        Ok(Arc::new(Carrier {
            elements,
            positions,
        }))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Atom] {
        &self.elements
    }

    pub fn atom(&self, index: usize) -> &Atom {
        &self.elements[index]
    }

    pub fn position(&self, atom: &str) -> Option<usize> {
        self.positions.get(atom).copied()
    }

    pub fn require(&self, atom: &str) -> Result<usize> {
        self.position(atom)
            .ok_or_else(|| Error::UnknownElement(Atom::from(atom)))
    }
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Carrier {}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

/// A decidable subset of a carrier, stored by its characteristic function.
///
/// Equality is extensional: two predicates are equal when they live over
/// equal carriers and have the same members.
#[derive(Clone, PartialEq, Eq)]
pub struct Predicate {
    carrier: Arc<Carrier>,
    bits: Vec<bool>,
}

impl Predicate {
    pub fn empty(carrier: &Arc<Carrier>) -> Self {
        Predicate {
            carrier: Arc::clone(carrier),
            bits: vec![false; carrier.len()],
        }
    }

    pub fn full(carrier: &Arc<Carrier>) -> Self {
        Predicate {
            carrier: Arc::clone(carrier),
            bits: vec![true; carrier.len()],
        }
    }

    pub fn from_fn(carrier: &Arc<Carrier>, f: impl FnMut(usize) -> bool) -> Self {
        Predicate {
            carrier: Arc::clone(carrier),
            bits: (0..carrier.len()).map(f).collect(),
        }
    }

    pub fn from_atoms<I, S>(carrier: &Arc<Carrier>, atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut p = Predicate::empty(carrier);
        for a in atoms {
            let i = carrier.require(a.as_ref())?;
            p.bits[i] = true;
        }
        Ok(p)
    }

    /// Bit `i` of `mask` decides membership of the `i`-th element.
    /// Carriers larger than 64 elements cannot be addressed this way.
    pub fn from_mask(carrier: &Arc<Carrier>, mask: u64) -> Self {
        assert!(carrier.len() <= 64, "mask addressing needs |A| <= 64");
        Predicate::from_fn(carrier, |i| mask >> i & 1 == 1)
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.bits.len() <= 64, "mask addressing needs |A| <= 64");
        self.members().fold(0, |m, i| m | 1 << i)
    }

    /// Every predicate over `carrier`, in mask order.
    pub fn all(carrier: &Arc<Carrier>) -> impl Iterator<Item = Predicate> + '_ {
        assert!(
            carrier.len() < 32,
            "refusing to enumerate 2^{} subsets",
            carrier.len()
        );
        (0..1u64 << carrier.len()).map(move |m| Predicate::from_mask(carrier, m))
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn contains(&self, index: usize) -> bool {
        self.bits[index]
    }

    pub fn contains_atom(&self, atom: &str) -> bool {
        self.carrier.position(atom).is_some_and(|i| self.bits[i])
    }

    /// Member indices in carrier order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// Member atoms sorted lexicographically, as they appear on disk.
    pub fn sorted_atoms(&self) -> Vec<Atom> {
        let set: BTreeSet<Atom> = self.atom_set();
        set.into_iter().collect()
    }

    pub fn atom_set(&self) -> BTreeSet<Atom> {
        self.members()
            .map(|i| self.carrier.atom(i).clone())
            .collect()
    }

    pub fn same_carrier(&self, other: &Predicate) -> Result<()> {
        if Arc::ptr_eq(&self.carrier, &other.carrier) || self.carrier == other.carrier {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    pub fn leq(&self, other: &Predicate) -> Result<bool> {
        self.same_carrier(other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &Predicate) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&p, &q)| !p || q)
    }

    pub fn complement(&self) -> Predicate {
        Predicate {
            carrier: Arc::clone(&self.carrier),
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn union(&self, other: &Predicate) -> Result<Predicate> {
        self.zip_with(other, |p, q| p || q)
    }

    pub fn intersection(&self, other: &Predicate) -> Result<Predicate> {
        self.zip_with(other, |p, q| p && q)
    }

    fn zip_with(&self, other: &Predicate, f: impl Fn(bool, bool) -> bool) -> Result<Predicate> {
        self.same_carrier(other)?;
        Ok(Predicate {
            carrier: Arc::clone(&self.carrier),
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&p, &q)| f(p, q))
                .collect(),
        })
    }
}

/// Prints `{a,b,c}` with atoms sorted lexicographically.
impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms: Vec<String> = self.sorted_atoms().iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", atoms.join(","))
    }
}

impl std::hash::Hash for Predicate {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

/// Serializes as the sorted array of member atoms.
impl Serialize for Predicate {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.sorted_atoms().serialize(serializer)
    }
}

impl fmt::Debug for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub id: Atom,
    pub premises: Predicate,
}

/// A rule set `(I, C)` over a finite carrier: each element owns an ordered
/// list of rules, each rule a premise subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet {
    carrier: Arc<Carrier>,
    rules: Vec<Vec<Rule>>,
}

impl RuleSet {
    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn rules_of(&self, element: usize) -> &[Rule] {
        &self.rules[element]
    }

    pub fn rules_of_atom(&self, element: &str) -> Result<&[Rule]> {
        Ok(&self.rules[self.carrier.require(element)?])
    }

    pub fn rule(&self, element: &str, rule: &str) -> Result<&Rule> {
        self.rules_of_atom(element)?
            .iter()
            .find(|r| r.id.as_str() == rule)
            .ok_or_else(|| Error::UnknownRule {
                element: element.into(),
                rule: rule.into(),
            })
    }

    /// The premise set `C(a, i)`.
    pub fn premises(&self, element: &str, rule: &str) -> Result<Predicate> {
        Ok(self.rule(element, rule)?.premises.clone())
    }

    pub fn rule_count(&self) -> usize {
        self.rules.iter().map(Vec::len).sum()
    }

    pub(crate) fn from_parts(carrier: Arc<Carrier>, rules: Vec<Vec<Rule>>) -> Self {
        debug_assert_eq!(carrier.len(), rules.len());
        RuleSet { carrier, rules }
    }

    pub(crate) fn check(&self, p: &Predicate) -> Result<()> {
        if Arc::ptr_eq(&self.carrier, p.carrier()) || *self.carrier == **p.carrier() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    pub fn to_def(&self) -> RuleSetDef {
        let rules = self
            .carrier
            .elements()
            .iter()
            .zip(&self.rules)
            .map(|(a, rs)| {
                let defs = rs
                    .iter()
                    .map(|r| RuleDef {
                        id: r.id.clone(),
                        premises: r.premises.sorted_atoms(),
                    })
                    .collect();
                (a.clone(), defs)
            })
            .collect();
        RuleSetDef {
            carrier: self.carrier.elements().to_vec(),
            rules,
        }
    }
}

impl TryFrom<RuleSetDef> for RuleSet {
    type Error = Error;

    fn try_from(def: RuleSetDef) -> Result<Self> {
        def.build()
    }
}

/// Serializable, unchecked form of a [`RuleSet`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleSetDef {
    pub carrier: Vec<Atom>,
    pub rules: BTreeMap<Atom, Vec<RuleDef>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleDef {
    pub id: Atom,
    pub premises: Vec<Atom>,
}

impl RuleSetDef {
    /// A definition with the given carrier and an empty rule list per element.
    pub fn new<I, S>(carrier: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<Atom>,
    {
        let carrier: Vec<Atom> = carrier.into_iter().map(Into::into).collect();
        let rules = carrier.iter().map(|a| (a.clone(), Vec::new())).collect();
        RuleSetDef { carrier, rules }
    }

    /// Appends a rule to `element`'s list.
    pub fn rule<I, S>(mut self, element: &str, id: &str, premises: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<Atom>,
    {
        self.rules.entry(element.into()).or_default().push(RuleDef {
            id: id.into(),
            premises: premises.into_iter().map(Into::into).collect(),
        });
        self
    }

    pub fn build(&self) -> Result<RuleSet> {
        let violations = validate_ruleset(self);
        if !violations.is_empty() {
            return Err(Error::InvalidRuleSet(violations));
        }
        let carrier = Carrier::new(self.carrier.iter().cloned())?;
        let rules = carrier
            .elements()
            .iter()
            .map(|a| {
                self.rules[a]
                    .iter()
                    .map(|r| {
                        Ok(Rule {
                            id: r.id.clone(),
                            premises: Predicate::from_atoms(&carrier, &r.premises)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RuleSet::from_parts(carrier, rules))
    }
}

/// One broken rule-set invariant, with enough location to find it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum Violation {
    DuplicateElement {
        element: Atom,
    },
    MissingRuleEntry {
        element: Atom,
    },
    UnknownConclusion {
        element: Atom,
    },
    DuplicateRuleId {
        element: Atom,
        rule: Atom,
    },
    UnknownPremise {
        element: Atom,
        rule: Atom,
        atom: Atom,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateElement { element } => {
                write!(f, "carrier lists `{element}` more than once")
            }
            Violation::MissingRuleEntry { element } => {
                write!(f, "rules has no entry for `{element}`")
            }
            Violation::UnknownConclusion { element } => {
                write!(f, "rules mentions `{element}`, which is not in the carrier")
            }
            Violation::DuplicateRuleId { element, rule } => {
                write!(f, "rule id `{rule}` repeats under `{element}`")
            }
            Violation::UnknownPremise {
                element,
                rule,
                atom,
            } => write!(
                f,
                "rule `{rule}` of `{element}` has premise `{atom}`, which is not in the carrier"
            ),
        }
    }
}

/// Every invariant violation of `def`; the definition is valid iff empty.
pub fn validate_ruleset(def: &RuleSetDef) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for a in &def.carrier {
        if !seen.insert(a) {
            out.push(Violation::DuplicateElement { element: a.clone() });
        }
    }
    let mut reported = BTreeSet::new();
    for a in &def.carrier {
        if !def.rules.contains_key(a) && reported.insert(a) {
            out.push(Violation::MissingRuleEntry { element: a.clone() });
        }
    }
    for (a, rules) in &def.rules {
        if !seen.contains(a) {
            out.push(Violation::UnknownConclusion { element: a.clone() });
        }
        let mut ids = BTreeSet::new();
        for r in rules {
            if !ids.insert(&r.id) {
                out.push(Violation::DuplicateRuleId {
                    element: a.clone(),
                    rule: r.id.clone(),
                });
            }
            for z in &r.premises {
                if !seen.contains(z) {
                    out.push(Violation::UnknownPremise {
                        element: a.clone(),
                        rule: r.id.clone(),
                        atom: z.clone(),
                    });
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub id: Atom,
    /// Index into the carrier: `ar(x, y, z)`.
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainerOption {
    pub id: Atom,
    pub branches: Vec<Branch>,
}

/// A `Br`/`ar` presentation of a polynomial operator: per element a list of
/// options `I(x)`, per option a list of branches `Br(x, y)`, and per branch
/// an arity `ar(x, y, z)` in the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedContainer {
    carrier: Arc<Carrier>,
    options: Vec<Vec<ContainerOption>>,
}

impl IndexedContainer {
    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn options_of(&self, element: usize) -> &[ContainerOption] {
        &self.options[element]
    }

    pub fn option(&self, element: &str, option: &str) -> Result<&ContainerOption> {
        let x = self.carrier.require(element)?;
        self.options[x]
            .iter()
            .find(|o| o.id.as_str() == option)
            .ok_or_else(|| Error::UnknownRule {
                element: element.into(),
                rule: option.into(),
            })
    }

    pub(crate) fn from_parts(carrier: Arc<Carrier>, options: Vec<Vec<ContainerOption>>) -> Self {
        debug_assert_eq!(carrier.len(), options.len());
        IndexedContainer { carrier, options }
    }

    pub(crate) fn check(&self, p: &Predicate) -> Result<()> {
        if Arc::ptr_eq(&self.carrier, p.carrier()) || *self.carrier == **p.carrier() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    pub fn to_def(&self) -> ContainerDef {
        let index = self
            .carrier
            .elements()
            .iter()
            .zip(&self.options)
            .map(|(a, opts)| {
                let defs = opts
                    .iter()
                    .map(|o| OptionDef {
                        id: o.id.clone(),
                        branches: o
                            .branches
                            .iter()
                            .map(|b| BranchDef {
                                id: b.id.clone(),
                                arity: self.carrier.atom(b.target).clone(),
                            })
                            .collect(),
                    })
                    .collect();
                (a.clone(), defs)
            })
            .collect();
        ContainerDef {
            carrier: self.carrier.elements().to_vec(),
            index,
        }
    }
}

/// Serializable, unchecked form of an [`IndexedContainer`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContainerDef {
    pub carrier: Vec<Atom>,
    pub index: BTreeMap<Atom, Vec<OptionDef>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionDef {
    pub id: Atom,
    pub branches: Vec<BranchDef>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchDef {
    pub id: Atom,
    pub arity: Atom,
}

impl ContainerDef {
    pub fn new<I, S>(carrier: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<Atom>,
    {
        let carrier: Vec<Atom> = carrier.into_iter().map(Into::into).collect();
        let index = carrier.iter().map(|a| (a.clone(), Vec::new())).collect();
        ContainerDef { carrier, index }
    }

    /// Appends an option to `element`; `branches` are `(branch id, arity)`.
    pub fn option<'a>(
        mut self,
        element: &str,
        id: &str,
        branches: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Self {
        self.index
            .entry(element.into())
            .or_default()
            .push(OptionDef {
                id: id.into(),
                branches: branches
                    .into_iter()
                    .map(|(b, ar)| BranchDef {
                        id: b.into(),
                        arity: ar.into(),
                    })
                    .collect(),
            });
        self
    }

    pub fn build(&self) -> Result<IndexedContainer> {
        let carrier = Carrier::new(self.carrier.iter().cloned())?;
        for a in self.index.keys() {
            carrier.position(a.as_str()).ok_or_else(|| {
                Error::InvalidContainer(format!("index mentions unknown element `{a}`"))
            })?;
        }
        let mut options = Vec::with_capacity(carrier.len());
        for a in carrier.elements() {
            let defs = self
                .index
                .get(a)
                .ok_or_else(|| Error::InvalidContainer(format!("index has no entry for `{a}`")))?;
            let mut ids = BTreeSet::new();
            let mut opts = Vec::with_capacity(defs.len());
            for o in defs {
                if !ids.insert(&o.id) {
                    return Err(Error::InvalidContainer(format!(
                        "option id `{}` repeats under `{a}`",
                        o.id
                    )));
                }
                let mut bids = BTreeSet::new();
                let mut branches = Vec::with_capacity(o.branches.len());
                for b in &o.branches {
                    if !bids.insert(&b.id) {
                        return Err(Error::InvalidContainer(format!(
                            "branch id `{}` repeats under `{a}`/`{}`",
                            b.id, o.id
                        )));
                    }
                    let target = carrier.position(b.arity.as_str()).ok_or_else(|| {
                        Error::InvalidContainer(format!(
                            "arity of `{a}`/`{}`/`{}` is `{}`, which is not in the carrier",
                            o.id, b.id, b.arity
                        ))
                    })?;
                    branches.push(Branch {
                        id: b.id.clone(),
                        target,
                    });
                }
                opts.push(ContainerOption {
                    id: o.id.clone(),
                    branches,
                });
            }
            options.push(opts);
        }
        Ok(IndexedContainer::from_parts(carrier, options))
    }
}
