//! Proof-relevant terms: derivation trees for inductive predicates, cover
//! proofs built from `rf`/`tr`, finite coinduction witnesses with their
//! one-step destructors, and (dependent) wellfounded trees over containers.
//!
//! Every recursor is a structural fold, so the conversion equations hold by
//! construction: evaluating on a constructor equals the step function
//! applied to the recursive results on its subterms.

mod derivation;
mod witness;
mod wtree;

use std::fmt;

use serde::Serialize;

use crate::ruleset::Atom;

pub use derivation::{
    check_cover_proof, check_derivation, derive, derive_cover, eval_cover_recursor,
    eval_ind_recursor, extract_cover_proof, extract_derivation, CoverProof, DerivationTree,
};
pub use witness::{
    build_coind_witness, verify_coind_witness, CoinductionWitness, PremiseEvidence, VMembership,
};
pub use wtree::{
    check_dwtree, dw_recursor, dw_sup, wtree_recursor, wtree_sup, DWTree, Signature, WTree,
};

/// Why a certificate was rejected, and where: `path` lists the conclusions
/// from the root down to the offending node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub path: Vec<Atom>,
    pub reason: String,
}

impl CheckFailure {
    pub(crate) fn new(path: &[Atom], reason: impl Into<String>) -> Self {
        CheckFailure {
            path: path.to_vec(),
            reason: reason.into(),
        }
    }
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.reason)
        } else {
            let path: Vec<&str> = self.path.iter().map(Atom::as_str).collect();
            write!(f, "at {}: {}", path.join(" > "), self.reason)
        }
    }
}

impl std::error::Error for CheckFailure {}
