use std::collections::{BTreeMap, BTreeSet};

use super::CheckFailure;
use crate::error::{Error, Result};
use crate::ruleset::{Atom, IndexedContainer};

/// A plain container: labels `A` and, per label, a finite branch set `B(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    labels: Vec<Atom>,
    branches: BTreeMap<Atom, Vec<Atom>>,
}

impl Signature {
    pub fn new<'a>(entries: impl IntoIterator<Item = (&'a str, Vec<&'a str>)>) -> Result<Self> {
        let mut labels = Vec::new();
        let mut branches = BTreeMap::new();
        for (label, bs) in entries {
            let bs: Vec<Atom> = bs.into_iter().map(Atom::from).collect();
            if bs.iter().collect::<BTreeSet<_>>().len() != bs.len() {
                return Err(Error::TreeShape(format!("`{label}` repeats a branch")));
            }
            if branches.insert(Atom::from(label), bs).is_some() {
                return Err(Error::TreeShape(format!("label `{label}` declared twice")));
            }
            labels.push(Atom::from(label));
        }
        Ok(Signature { labels, branches })
    }

    /// `leaf` with no branches, `node` with branches `L` and `R`.
    pub fn binary_tree() -> Self {
        Signature::new([("leaf", vec![]), ("node", vec!["L", "R"])]).expect("well-formed")
    }

    pub fn labels(&self) -> &[Atom] {
        &self.labels
    }

    pub fn branches(&self, label: &str) -> Option<&[Atom]> {
        self.branches.get(label).map(Vec::as_slice)
    }
}

/// A wellfounded tree `sup(a, f)` over a [`Signature`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WTree {
    label: Atom,
    subtrees: BTreeMap<Atom, WTree>,
}

impl WTree {
    pub fn label(&self) -> &Atom {
        &self.label
    }

    pub fn subtrees(&self) -> &BTreeMap<Atom, WTree> {
        &self.subtrees
    }
}

/// `sup(a, f)`: `f` must give exactly one subtree per branch in `B(a)`.
pub fn wtree_sup(sig: &Signature, label: &str, subtrees: BTreeMap<Atom, WTree>) -> Result<WTree> {
    let expected = sig
        .branches(label)
        .ok_or_else(|| Error::TreeShape(format!("unknown label `{label}`")))?;
    let given: BTreeSet<&Atom> = subtrees.keys().collect();
    if given != expected.iter().collect() {
        return Err(Error::TreeShape(format!(
            "`{label}` needs subtrees at {expected:?}, got {given:?}"
        )));
    }
    Ok(WTree {
        label: label.into(),
        subtrees,
    })
}

/// The W-type eliminator: `d(a, f, λy. rec(f(y)))`.
pub fn wtree_recursor<T, D>(t: &WTree, d: &mut D) -> T
where
    D: FnMut(&Atom, &BTreeMap<Atom, WTree>, BTreeMap<Atom, T>) -> T,
{
    let results = t
        .subtrees
        .iter()
        .map(|(y, sub)| (y.clone(), wtree_recursor(sub, d)))
        .collect();
    d(&t.label, &t.subtrees, results)
}

/// A dependent wellfounded tree `dsup(a, i, f)` over an indexed container:
/// the subtree at branch `z` is rooted at `ar(a, i, z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DWTree {
    label: Atom,
    option: Atom,
    subtrees: BTreeMap<Atom, DWTree>,
}

impl DWTree {
    pub fn label(&self) -> &Atom {
        &self.label
    }

    pub fn option(&self) -> &Atom {
        &self.option
    }

    pub fn subtrees(&self) -> &BTreeMap<Atom, DWTree> {
        &self.subtrees
    }
}

/// `dsup(a, i, f)`; rejects any subtree whose root label is not `ar(a, i, z)`.
pub fn dw_sup(
    k: &IndexedContainer,
    label: &str,
    option: &str,
    subtrees: BTreeMap<Atom, DWTree>,
) -> Result<DWTree> {
    let opt = k
        .option(label, option)
        .map_err(|e| Error::TreeShape(e.to_string()))?;
    if subtrees.len() != opt.branches.len() {
        return Err(Error::TreeShape(format!(
            "`{label}`/`{option}` has {} branches, got {} subtrees",
            opt.branches.len(),
            subtrees.len()
        )));
    }
    for b in &opt.branches {
        let sub = subtrees.get(&b.id).ok_or_else(|| {
            Error::TreeShape(format!(
                "missing subtree at branch `{}` of `{label}`/`{option}`",
                b.id
            ))
        })?;
        let want = k.carrier().atom(b.target);
        if sub.label != *want {
            return Err(Error::TreeShape(format!(
                "branch `{}` of `{label}`/`{option}` must be rooted at `{want}`, not `{}`",
                b.id, sub.label
            )));
        }
    }
    Ok(DWTree {
        label: label.into(),
        option: option.into(),
        subtrees,
    })
}

/// The dependent W-type eliminator: `d(a, i, f, λz. rec(f(z)))`.
pub fn dw_recursor<T, D>(t: &DWTree, d: &mut D) -> T
where
    D: FnMut(&Atom, &Atom, &BTreeMap<Atom, DWTree>, BTreeMap<Atom, T>) -> T,
{
    let results = t
        .subtrees
        .iter()
        .map(|(z, sub)| (z.clone(), dw_recursor(sub, d)))
        .collect();
    d(&t.label, &t.option, &t.subtrees, results)
}

/// Full traversal re-checking arity coherence against `k`.
pub fn check_dwtree(k: &IndexedContainer, t: &DWTree) -> Result<(), CheckFailure> {
    fn go(k: &IndexedContainer, path: &mut Vec<Atom>, t: &DWTree) -> Result<(), CheckFailure> {
        path.push(t.label.clone());
        let opt = k
            .option(t.label.as_str(), t.option.as_str())
            .map_err(|e| CheckFailure::new(path, e.to_string()))?;
        if opt.branches.len() != t.subtrees.len() {
            return Err(CheckFailure::new(path, "branch count mismatch"));
        }
        for b in &opt.branches {
            let Some(sub) = t.subtrees.get(&b.id) else {
                return Err(CheckFailure::new(
                    path,
                    format!("missing branch `{}`", b.id),
                ));
            };
            if sub.label != *k.carrier().atom(b.target) {
                return Err(CheckFailure::new(
                    path,
                    format!("branch `{}` has wrong root", b.id),
                ));
            }
            go(k, path, sub)?;
        }
        path.pop();
        Ok(())
    }
    go(k, &mut Vec::new(), t)
}
