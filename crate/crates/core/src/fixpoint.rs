//! Least and greatest fixed points by Kleene iteration, the named
//! constructors built on them (inductive/coinductive predicates, generated
//! cover, positivity), and the exhaustive oracle that quantifies over every
//! predicate of the carrier.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::{conf_raw, conf_v_raw, der_raw, der_v_raw};
use crate::ruleset::{Carrier, Predicate, RuleSet};

/// Largest carrier the oracle will enumerate by default (2^16 subsets).
pub const DEFAULT_ORACLE_BOUND: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FixpointKind {
    Least,
    Greatest,
}

/// The Kleene iterates of one solve.
///
/// `stages[0]` is the start point (empty for a least, full for a greatest
/// fixed point) and the last stage is the fixed point; consecutive stages
/// are distinct. For a least fixed point `rank[x]` is the first stage
/// containing `x`; for a greatest one it is the last stage containing `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixpointTrace {
    pub kind: FixpointKind,
    pub stages: Vec<Predicate>,
    pub rank: Vec<Option<usize>>,
}

impl FixpointTrace {
    pub fn result(&self) -> &Predicate {
        self.stages.last().expect("a trace has at least one stage")
    }

    pub fn rank_of(&self, atom: &str) -> Option<usize> {
        let i = self.result().carrier().position(atom)?;
        self.rank[i]
    }
}

/// Least fixed point of `op`, iterating upwards from the empty predicate.
///
/// A stage that fails to contain its predecessor means `op` is not monotone
/// and is reported instead of iterated further.
pub fn lfp<F>(carrier: &Arc<Carrier>, op: F) -> Result<(Predicate, FixpointTrace)>
where
    F: Fn(&Predicate) -> Predicate,
{
    iterate(carrier, FixpointKind::Least, op)
}

/// Greatest fixed point of `op`, iterating downwards from the full carrier.
pub fn gfp<F>(carrier: &Arc<Carrier>, op: F) -> Result<(Predicate, FixpointTrace)>
where
    F: Fn(&Predicate) -> Predicate,
{
    iterate(carrier, FixpointKind::Greatest, op)
}

fn iterate<F>(
    carrier: &Arc<Carrier>,
    kind: FixpointKind,
    op: F,
) -> Result<(Predicate, FixpointTrace)>
where
    F: Fn(&Predicate) -> Predicate,
{
    let start = match kind {
        FixpointKind::Least => Predicate::empty(carrier),
        FixpointKind::Greatest => Predicate::full(carrier),
    };
    let mut stages = vec![start];
    // A strict chain in a lattice of height |A| has at most |A| + 1 points.
    let max_steps = carrier.len() + 1;
    for step in 1..=max_steps {
        let current = stages.last().unwrap();
        let next = op(current);
        next.same_carrier(current)?;
        if next == *current {
            let rank = ranks(kind, &stages, carrier.len());
            let trace = FixpointTrace { kind, stages, rank };
            return Ok((trace.result().clone(), trace));
        }
        let ordered = match kind {
            FixpointKind::Least => current.leq_unchecked(&next),
            FixpointKind::Greatest => next.leq_unchecked(current),
        };
        if !ordered {
            return Err(Error::NotMonotone { stage: step });
        }
        stages.push(next);
    }
    Err(Error::NonConvergent { steps: max_steps })
}

fn ranks(kind: FixpointKind, stages: &[Predicate], n: usize) -> Vec<Option<usize>> {
    (0..n)
        .map(|x| {
            let mut containing = stages.iter().enumerate().filter(|(_, s)| s.contains(x));
            match kind {
                FixpointKind::Least => containing.next().map(|(k, _)| k),
                FixpointKind::Greatest => containing.next_back().map(|(k, _)| k),
            }
        })
        .collect()
}

pub fn ind_trace(r: &RuleSet) -> FixpointTrace {
    lfp(r.carrier(), |p| der_raw(r, p))
        .expect("der is monotone")
        .1
}

pub fn coind_trace(r: &RuleSet) -> FixpointTrace {
    gfp(r.carrier(), |p| conf_raw(r, p))
        .expect("conf is monotone")
        .1
}

pub fn cover_trace(r: &RuleSet, v: &Predicate) -> Result<FixpointTrace> {
    r.check(v)?;
    Ok(lfp(r.carrier(), |p| der_v_raw(r, v, p))
        .expect("der_v is monotone")
        .1)
}

pub fn positivity_trace(r: &RuleSet, v: &Predicate) -> Result<FixpointTrace> {
    r.check(v)?;
    Ok(gfp(r.carrier(), |p| conf_v_raw(r, v, p))
        .expect("conf_v is monotone")
        .1)
}

/// The inductive predicate: the least predicate closed under `r`.
pub fn ind_predicate(r: &RuleSet) -> Predicate {
    ind_trace(r).result().clone()
}

/// The coinductive predicate: the greatest predicate consistent with `r`.
pub fn coind_predicate(r: &RuleSet) -> Predicate {
    coind_trace(r).result().clone()
}

/// The generated basic cover `{a | a ◁ V}`.
pub fn cover(r: &RuleSet, v: &Predicate) -> Result<Predicate> {
    Ok(cover_trace(r, v)?.result().clone())
}

/// The generated positivity relation `{a | a ⋉ V}`.
pub fn positivity(r: &RuleSet, v: &Predicate) -> Result<Predicate> {
    Ok(positivity_trace(r, v)?.result().clone())
}

/// Intersection of every predicate closed under `der_v(r, V, ·)`, or under
/// `der(r, ·)` when `v` is `None`.
pub fn oracle_lfp(r: &RuleSet, v: Option<&Predicate>) -> Result<Predicate> {
    oracle_lfp_bounded(r, v, DEFAULT_ORACLE_BOUND)
}

/// Union of every predicate consistent with `conf_v(r, V, ·)`, or with
/// `conf(r, ·)` when `v` is `None`.
pub fn oracle_gfp(r: &RuleSet, v: Option<&Predicate>) -> Result<Predicate> {
    oracle_gfp_bounded(r, v, DEFAULT_ORACLE_BOUND)
}

pub fn oracle_lfp_bounded(r: &RuleSet, v: Option<&Predicate>, bound: usize) -> Result<Predicate> {
    check_bound(r, v, bound)?;
    let mut acc = Predicate::full(r.carrier());
    for p in Predicate::all(r.carrier()) {
        if verify_closed(r, v, &p)? {
            acc = acc.intersection(&p)?;
        }
    }
    Ok(acc)
}

pub fn oracle_gfp_bounded(r: &RuleSet, v: Option<&Predicate>, bound: usize) -> Result<Predicate> {
    check_bound(r, v, bound)?;
    let mut acc = Predicate::empty(r.carrier());
    for p in Predicate::all(r.carrier()) {
        if verify_consistent(r, v, &p)? {
            acc = acc.union(&p)?;
        }
    }
    Ok(acc)
}

fn check_bound(r: &RuleSet, v: Option<&Predicate>, bound: usize) -> Result<()> {
    if let Some(v) = v {
        r.check(v)?;
    }
    let n = r.carrier().len();
    if n > bound.min(31) {
        return Err(Error::BoundExceeded {
            what: "oracle carrier size",
            limit: bound.min(31),
            actual: n,
        });
    }
    Ok(())
}

/// `der(P) ≤ P`, or `der_v(V, P) ≤ P` when `v` is given.
pub fn verify_closed(r: &RuleSet, v: Option<&Predicate>, p: &Predicate) -> Result<bool> {
    r.check(p)?;
    let d = match v {
        Some(v) => {
            r.check(v)?;
            der_v_raw(r, v, p)
        }
        None => der_raw(r, p),
    };
    Ok(d.leq_unchecked(p))
}

/// `P ≤ conf(P)`, or `P ≤ conf_v(V, P)` when `v` is given.
pub fn verify_consistent(r: &RuleSet, v: Option<&Predicate>, p: &Predicate) -> Result<bool> {
    r.check(p)?;
    let c = match v {
        Some(v) => {
            r.check(v)?;
            conf_v_raw(r, v, p)
        }
        None => conf_raw(r, p),
    };
    Ok(p.leq_unchecked(&c))
}
