#![allow(dead_code)]

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};

use cofix::fixpoint::ind_trace;
use cofix::fixtures;
use cofix::proofobjects::{CoverProof, DerivationTree};
use cofix::{Atom, Predicate, RuleSet, RuleSetDef};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Fixtures that fit exhaustive enumeration, followed by `n` seeded random
/// rule sets of at most `max` elements.
pub fn instances(n: usize, max: usize, seed: u64) -> Vec<(String, RuleSet)> {
    let mut out: Vec<(String, RuleSet)> = fixtures::all()
        .into_iter()
        .map(|(name, r)| (name.to_string(), r))
        .collect();
    let mut g = rng(seed);
    for k in 0..n {
        out.push((format!("random#{k}"), fixtures::random_ruleset(&mut g, max)));
    }
    out
}

pub fn subsets(r: &RuleSet) -> Vec<Predicate> {
    Predicate::all(r.carrier()).collect()
}

/// Set-level reading of a rule set, detached from the solver's bit vectors.
pub struct Naive {
    pub carrier: Vec<Atom>,
    pub rules: BTreeMap<Atom, Vec<(Atom, BTreeSet<Atom>)>>,
}

impl Naive {
    pub fn of(def: &RuleSetDef) -> Self {
        let rules = def
            .rules
            .iter()
            .map(|(x, rs)| {
                let rs = rs
                    .iter()
                    .map(|rd| (rd.id.clone(), rd.premises.iter().cloned().collect()))
                    .collect();
                (x.clone(), rs)
            })
            .collect();
        Naive {
            carrier: def.carrier.clone(),
            rules,
        }
    }

    fn rules_of(&self, x: &Atom) -> &[(Atom, BTreeSet<Atom>)] {
        self.rules.get(x).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn der(&self, p: &BTreeSet<Atom>) -> BTreeSet<Atom> {
        self.carrier
            .iter()
            .filter(|x| self.rules_of(x).iter().any(|(_, c)| c.is_subset(p)))
            .cloned()
            .collect()
    }

    pub fn conf(&self, p: &BTreeSet<Atom>) -> BTreeSet<Atom> {
        self.carrier
            .iter()
            .filter(|x| self.rules_of(x).iter().all(|(_, c)| !c.is_disjoint(p)))
            .cloned()
            .collect()
    }

    /// All subsets of the carrier, in mask order.
    pub fn powerset(&self) -> Vec<BTreeSet<Atom>> {
        let n = self.carrier.len();
        (0u64..1 << n)
            .map(|m| {
                (0..n)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| self.carrier[i].clone())
                    .collect()
            })
            .collect()
    }

    /// Intersection of every `P` with `V ∪ der(P) ⊆ P`.
    pub fn least(&self, v: &BTreeSet<Atom>) -> BTreeSet<Atom> {
        let mut acc: BTreeSet<Atom> = self.carrier.iter().cloned().collect();
        for p in self.powerset() {
            let step: BTreeSet<Atom> = self.der(&p).union(v).cloned().collect();
            if step.is_subset(&p) {
                acc = acc.intersection(&p).cloned().collect();
            }
        }
        acc
    }

    /// Union of every `P` with `P ⊆ V ∩ conf(P)`.
    pub fn greatest(&self, v: &BTreeSet<Atom>) -> BTreeSet<Atom> {
        let mut acc = BTreeSet::new();
        for p in self.powerset() {
            let step: BTreeSet<Atom> = self.conf(&p).intersection(v).cloned().collect();
            if p.is_subset(&step) {
                acc.extend(p);
            }
        }
        acc
    }
}

pub fn set(p: &Predicate) -> BTreeSet<Atom> {
    p.atom_set()
}

pub fn hash_of<T: Hash>(value: &T) -> u64 {
    let mut h = DefaultHasher::new();
    value.hash(&mut h);
    h.finish()
}

/// A random derivation of `x` no deeper than `depth`, choosing uniformly
/// among the rules whose premises are all derivable one level shallower.
/// Returns `None` when `x` has no derivation within the budget.
pub fn random_derivation<R: Rng>(
    r: &RuleSet,
    x: &str,
    depth: usize,
    g: &mut R,
) -> Option<DerivationTree> {
    let trace = ind_trace(r);
    gen_tree(r, &trace.rank, r.carrier().position(x)?, depth, g)
}

fn gen_tree<R: Rng>(
    r: &RuleSet,
    rank: &[Option<usize>],
    x: usize,
    depth: usize,
    g: &mut R,
) -> Option<DerivationTree> {
    if depth == 0 {
        return None;
    }
    let fits = |z: usize| rank[z].is_some_and(|k| k < depth);
    let usable: Vec<_> = r
        .rules_of(x)
        .iter()
        .filter(|rule| rule.premises.members().all(fits))
        .collect();
    let rule = usable.choose(g)?;
    let carrier = r.carrier();
    let mut children = BTreeMap::new();
    for z in rule.premises.members() {
        let sub_depth = g.gen_range(rank[z].unwrap()..depth);
        children.insert(carrier.atom(z).clone(), gen_tree(r, rank, z, sub_depth, g)?);
    }
    Some(DerivationTree {
        conclusion: carrier.atom(x).clone(),
        rule: rule.id.clone(),
        children,
    })
}

/// A random cover proof of `x ◁ V` no deeper than `depth`: a member of `V`
/// may stop with `rf` or keep going with a rule.
pub fn random_cover_proof<R: Rng>(
    r: &RuleSet,
    v: &Predicate,
    x: &str,
    depth: usize,
    g: &mut R,
) -> Option<CoverProof> {
    let trace = cofix::fixpoint::cover_trace(r, v).ok()?;
    gen_cover(r, v, &trace.rank, r.carrier().position(x)?, depth, g)
}

fn gen_cover<R: Rng>(
    r: &RuleSet,
    v: &Predicate,
    rank: &[Option<usize>],
    x: usize,
    depth: usize,
    g: &mut R,
) -> Option<CoverProof> {
    if depth == 0 {
        return None;
    }
    let carrier = r.carrier();
    let fits = |z: usize| rank[z].is_some_and(|k| k < depth);
    let usable: Vec<_> = r
        .rules_of(x)
        .iter()
        .filter(|rule| rule.premises.members().all(fits))
        .collect();
    if v.contains(x) && (usable.is_empty() || g.gen_bool(0.5)) {
        return Some(CoverProof::Rf {
            conclusion: carrier.atom(x).clone(),
        });
    }
    let rule = usable.choose(g)?;
    let mut children = BTreeMap::new();
    for z in rule.premises.members() {
        let sub_depth = g.gen_range(rank[z].unwrap()..depth);
        children.insert(
            carrier.atom(z).clone(),
            gen_cover(r, v, rank, z, sub_depth, g)?,
        );
    }
    Some(CoverProof::Tr {
        conclusion: carrier.atom(x).clone(),
        rule: rule.id.clone(),
        children,
    })
}
