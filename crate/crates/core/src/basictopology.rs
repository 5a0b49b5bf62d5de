//! Checks that the generated pair (cover, positivity) satisfies the laws of
//! a basic topology, quantifying over every `(a, U, V)` on small carriers
//! and over a seeded random sample otherwise.
//!
//! Cotransitivity and compatibility are each checked in two quantifier
//! placements. The standard forms gate [`LawReport::passed`]; the
//! alternative ("literal") forms are reported for information only:
//!
//! | law | gating form | informative form |
//! |-----|-------------|------------------|
//! | cotransitivity | `a ⋉ U`, `∀x (x ⋉ U ⇒ x ε V)` ⊢ `a ⋉ V` | `a ⋉ U`, `∀x (x ⋉ V ⇒ x ε U)` ⊢ `a ⋉ V` |
//! | compatibility | `a ⋉ V`, `a ◁ U` ⊢ `∃x ε U. x ⋉ V` | `a ⋉ V`, `a ◁ U` ⊢ `∃x ε V. x ⋉ U` |

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixpoint::{cover, positivity};
use crate::ruleset::{Atom, Predicate, RuleSet};

/// Carriers up to this size are checked exhaustively by default.
pub const DEFAULT_EXHAUSTIVE_SIZE: usize = 4;
/// Exhaustive checking is refused above this size.
pub const EXHAUSTIVE_LIMIT: usize = 10;
pub const DEFAULT_SAMPLES: usize = 2000;
/// Counterexamples kept per law.
const MAX_COUNTEREXAMPLES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    Exhaustive,
    Random { samples: usize, seed: u64 },
}

impl Sampling {
    /// Exhaustive for carriers of at most [`DEFAULT_EXHAUSTIVE_SIZE`]
    /// elements, otherwise [`DEFAULT_SAMPLES`] triples from seed 0.
    pub fn default_for(r: &RuleSet) -> Self {
        if r.carrier().len() <= DEFAULT_EXHAUSTIVE_SIZE {
            Sampling::Exhaustive
        } else {
            Sampling::Random {
                samples: DEFAULT_SAMPLES,
                seed: 0,
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Reflexivity,
    Transitivity,
    Coreflexivity,
    Cotransitivity,
    CotransitivityLiteral,
    Compatibility,
    CompatibilityLiteral,
}

impl Law {
    pub const COVER: [Law; 2] = [Law::Reflexivity, Law::Transitivity];
    pub const POSITIVITY: [Law; 3] = [
        Law::Coreflexivity,
        Law::Cotransitivity,
        Law::CotransitivityLiteral,
    ];
    pub const COMPATIBILITY: [Law; 2] = [Law::Compatibility, Law::CompatibilityLiteral];
    pub const ALL: [Law; 7] = [
        Law::Reflexivity,
        Law::Transitivity,
        Law::Coreflexivity,
        Law::Cotransitivity,
        Law::CotransitivityLiteral,
        Law::Compatibility,
        Law::CompatibilityLiteral,
    ];

    pub fn gating(self) -> bool {
        !matches!(self, Law::CotransitivityLiteral | Law::CompatibilityLiteral)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub a: Atom,
    pub u: Predicate,
    pub v: Predicate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: Law,
    pub gating: bool,
    pub checked: u64,
    pub holds: bool,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub sampling: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub passed: bool,
    pub laws: Vec<LawResult>,
}

impl LawReport {
    pub fn law(&self, law: Law) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.law == law)
    }
}

// Memoized cover/positivity per parameter subset.
struct Tables<'r> {
    r: &'r RuleSet,
    cover: HashMap<Predicate, Predicate>,
    pos: HashMap<Predicate, Predicate>,
}

impl<'r> Tables<'r> {
    fn new(r: &'r RuleSet) -> Self {
        Tables {
            r,
            cover: HashMap::new(),
            pos: HashMap::new(),
        }
    }

    fn cover(&mut self, v: &Predicate) -> Result<Predicate> {
        if let Some(c) = self.cover.get(v) {
            return Ok(c.clone());
        }
        let c = cover(self.r, v)?;
        self.cover.insert(v.clone(), c.clone());
        Ok(c)
    }

    fn pos(&mut self, v: &Predicate) -> Result<Predicate> {
        if let Some(c) = self.pos.get(v) {
            return Ok(c.clone());
        }
        let c = positivity(self.r, v)?;
        self.pos.insert(v.clone(), c.clone());
        Ok(c)
    }
}

fn intersects(p: &Predicate, q: &Predicate) -> bool {
    p.members().any(|x| q.contains(x))
}

fn law_holds(t: &mut Tables<'_>, law: Law, a: usize, u: &Predicate, v: &Predicate) -> Result<bool> {
    Ok(match law {
        Law::Reflexivity => !v.contains(a) || t.cover(v)?.contains(a),
        Law::Transitivity => {
            let cv = t.cover(v)?;
            !(t.cover(u)?.contains(a) && u.leq_unchecked(&cv)) || cv.contains(a)
        }
        Law::Coreflexivity => !t.pos(v)?.contains(a) || v.contains(a),
        Law::Cotransitivity => {
            let pu = t.pos(u)?;
            !(pu.contains(a) && pu.leq_unchecked(v)) || t.pos(v)?.contains(a)
        }
        Law::CotransitivityLiteral => {
            let pv = t.pos(v)?;
            !(t.pos(u)?.contains(a) && pv.leq_unchecked(u)) || pv.contains(a)
        }
        Law::Compatibility => {
            let pv = t.pos(v)?;
            !(pv.contains(a) && t.cover(u)?.contains(a)) || intersects(u, &pv)
        }
        Law::CompatibilityLiteral => {
            !(t.pos(v)?.contains(a) && t.cover(u)?.contains(a)) || intersects(v, &t.pos(u)?)
        }
    })
}

fn triples(r: &RuleSet, sampling: Sampling) -> Result<Vec<(usize, Predicate, Predicate)>> {
    let carrier = r.carrier();
    let n = carrier.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    match sampling {
        Sampling::Exhaustive => {
            if n > EXHAUSTIVE_LIMIT {
                return Err(Error::BoundExceeded {
                    what: "exhaustive law-check carrier size",
                    limit: EXHAUSTIVE_LIMIT,
                    actual: n,
                });
            }
            let subsets: Vec<Predicate> = Predicate::all(carrier).collect();
            let mut out = Vec::with_capacity(n * subsets.len() * subsets.len());
            for u in &subsets {
                for v in &subsets {
                    for a in 0..n {
                        out.push((a, u.clone(), v.clone()));
                    }
                }
            }
            Ok(out)
        }
        Sampling::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..samples)
                .map(|_| {
                    let a = rng.gen_range(0..n);
                    let u = Predicate::from_fn(carrier, |_| rng.gen_bool(0.5));
                    let v = Predicate::from_fn(carrier, |_| rng.gen_bool(0.5));
                    (a, u, v)
                })
                .collect())
        }
    }
}

/// Checks the given laws over all (or sampled) triples `(a, U, V)`.
pub fn check_laws(r: &RuleSet, sampling: Sampling, laws: &[Law]) -> Result<LawReport> {
    let mut tables = Tables::new(r);
    let mut results: Vec<LawResult> = laws
        .iter()
        .map(|&law| LawResult {
            law,
            gating: law.gating(),
            checked: 0,
            holds: true,
            counterexamples: Vec::new(),
        })
        .collect();
    for (a, u, v) in triples(r, sampling)? {
        for res in &mut results {
            res.checked += 1;
            if !law_holds(&mut tables, res.law, a, &u, &v)? {
                res.holds = false;
                if res.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    res.counterexamples.push(Counterexample {
                        a: r.carrier().atom(a).clone(),
                        u: u.clone(),
                        v: v.clone(),
                    });
                }
            }
        }
    }
    let passed = results.iter().all(|l| l.holds || !l.gating);
    let (sampling, seed) = match sampling {
        Sampling::Exhaustive => ("exhaustive", None),
        Sampling::Random { seed, .. } => ("random", Some(seed)),
    };
    Ok(LawReport {
        sampling,
        seed,
        passed,
        laws: results,
    })
}

/// Reflexivity and transitivity of the generated cover.
pub fn check_cover_laws(r: &RuleSet, sampling: Sampling) -> Result<LawReport> {
    check_laws(r, sampling, &Law::COVER)
}

/// Coreflexivity and cotransitivity (both forms) of the generated positivity.
pub fn check_positivity_laws(r: &RuleSet, sampling: Sampling) -> Result<LawReport> {
    check_laws(r, sampling, &Law::POSITIVITY)
}

/// Compatibility of cover and positivity, in both quantifier placements.
pub fn check_compatibility(r: &RuleSet, sampling: Sampling) -> Result<LawReport> {
    check_laws(r, sampling, &Law::COMPATIBILITY)
}

/// Every law at once.
pub fn check_basic_topology(r: &RuleSet, sampling: Sampling) -> Result<LawReport> {
    check_laws(r, sampling, &Law::ALL)
}

/// One generating axiom `a ◁ C(a, i)` and its positivity counterpart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomEntry {
    pub element: Atom,
    pub rule: Atom,
    /// `a ∈ cover(r, C(a, i))`.
    pub cover: bool,
    /// For every checked `V`: `a ⋉ V` implies some premise of `i` is `⋉ V`.
    pub unfold: bool,
    /// When `a ∈ coind(r)` and `a ε C(a, i)`: whether `a ⋉ C(a, i)`.
    /// Absent when the side condition does not apply. Informative only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positivity: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub entries: Vec<AxiomEntry>,
}

/// Verifies the generating axioms of every rule. The `unfold` check runs
/// over all `V` when the carrier has at most [`EXHAUSTIVE_LIMIT`] elements
/// and over `V = A` otherwise.
pub fn check_generated_axioms(r: &RuleSet) -> Result<AxiomReport> {
    let carrier = r.carrier();
    let mut tables = Tables::new(r);
    let params: Vec<Predicate> = if carrier.len() <= EXHAUSTIVE_LIMIT {
        Predicate::all(carrier).collect()
    } else {
        vec![Predicate::full(carrier)]
    };
    let coind = crate::fixpoint::coind_predicate(r);
    let mut entries = Vec::new();
    for a in 0..carrier.len() {
        for rule in r.rules_of(a) {
            let cover = tables.cover(&rule.premises)?.contains(a);
            let mut unfold = true;
            for v in &params {
                let pv = tables.pos(v)?;
                if pv.contains(a) && !intersects(&rule.premises, &pv) {
                    unfold = false;
                    break;
                }
            }
            let positivity = (coind.contains(a) && rule.premises.contains(a))
                .then(|| tables.pos(&rule.premises).map(|p| p.contains(a)))
                .transpose()?;
            entries.push(AxiomEntry {
                element: carrier.atom(a).clone(),
                rule: rule.id.clone(),
                cover,
                unfold,
                positivity,
            });
        }
    }
    let passed = entries.iter().all(|e| e.cover && e.unfold);
    Ok(AxiomReport { passed, entries })
}
