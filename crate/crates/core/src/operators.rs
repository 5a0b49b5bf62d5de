//! The monotone operators `Der` and `Conf` on predicates, their `V`-indexed
//! variants, and the container-presented `Der_{Br,ar}` / `Conf_{Br,ar}`.
//!
//! Vacuous quantifiers are read classically on the finite carrier: an
//! element with no rules is never derivable and always confutable, and a rule
//! with no premises is always applicable but never confutes.

use crate::error::Result;
use crate::ruleset::{IndexedContainer, Predicate, RuleSet};

/// `x` is derivable when some rule of `x` has every premise in `p`.
pub fn der(r: &RuleSet, p: &Predicate) -> Result<Predicate> {
    r.check(p)?;
    Ok(der_raw(r, p))
}

/// `x` is confutable when every rule of `x` has some premise in `p`.
pub fn conf(r: &RuleSet, p: &Predicate) -> Result<Predicate> {
    r.check(p)?;
    Ok(conf_raw(r, p))
}

/// `V ∪ der(r, p)`.
pub fn der_v(r: &RuleSet, v: &Predicate, p: &Predicate) -> Result<Predicate> {
    r.check(v)?;
    r.check(p)?;
    Ok(der_v_raw(r, v, p))
}

/// `V ∩ conf(r, p)`.
pub fn conf_v(r: &RuleSet, v: &Predicate, p: &Predicate) -> Result<Predicate> {
    r.check(v)?;
    r.check(p)?;
    Ok(conf_v_raw(r, v, p))
}

pub fn der_container(k: &IndexedContainer, p: &Predicate) -> Result<Predicate> {
    k.check(p)?;
    Ok(Predicate::from_fn(k.carrier(), |x| {
        k.options_of(x)
            .iter()
            .any(|o| o.branches.iter().all(|b| p.contains(b.target)))
    }))
}

pub fn conf_container(k: &IndexedContainer, p: &Predicate) -> Result<Predicate> {
    k.check(p)?;
    Ok(Predicate::from_fn(k.carrier(), |x| {
        k.options_of(x)
            .iter()
            .all(|o| o.branches.iter().any(|b| p.contains(b.target)))
    }))
}

pub fn is_closed(r: &RuleSet, p: &Predicate) -> Result<bool> {
    Ok(der(r, p)?.leq_unchecked(p))
}

pub fn is_consistent(r: &RuleSet, p: &Predicate) -> Result<bool> {
    Ok(p.leq_unchecked(&conf(r, p)?))
}

pub fn is_closed_v(r: &RuleSet, v: &Predicate, p: &Predicate) -> Result<bool> {
    Ok(der_v(r, v, p)?.leq_unchecked(p))
}

pub fn is_consistent_v(r: &RuleSet, v: &Predicate, p: &Predicate) -> Result<bool> {
    Ok(p.leq_unchecked(&conf_v(r, v, p)?))
}

pub(crate) fn der_raw(r: &RuleSet, p: &Predicate) -> Predicate {
    Predicate::from_fn(r.carrier(), |x| {
        r.rules_of(x)
            .iter()
            .any(|rule| rule.premises.members().all(|z| p.contains(z)))
    })
}

pub(crate) fn conf_raw(r: &RuleSet, p: &Predicate) -> Predicate {
    Predicate::from_fn(r.carrier(), |x| {
        r.rules_of(x)
            .iter()
            .all(|rule| rule.premises.members().any(|z| p.contains(z)))
    })
}

pub(crate) fn der_v_raw(r: &RuleSet, v: &Predicate, p: &Predicate) -> Predicate {
    let d = der_raw(r, p);
    Predicate::from_fn(r.carrier(), |x| v.contains(x) || d.contains(x))
}

pub(crate) fn conf_v_raw(r: &RuleSet, v: &Predicate, p: &Predicate) -> Predicate {
    let c = conf_raw(r, p);
    Predicate::from_fn(r.carrier(), |x| v.contains(x) && c.contains(x))
}
