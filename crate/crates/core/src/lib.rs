//! A finite-model engine for inductive and coinductive definitions.
//!
//! Given a rule set over a finite carrier, `cofix` computes the inductive
//! predicate (least closed predicate), the coinductive predicate (greatest
//! consistent predicate), the generated basic cover `a ◁ V` and positivity
//! relation `a ⋉ V`, and produces checkable proof objects for each. The
//! encodings between these constructors are executable and can be compared
//! against a brute-force oracle that quantifies over every predicate of the
//! carrier.
//!
//! ```
//! use cofix::{fixtures, fixpoint, ruleset::Predicate};
//!
//! let r2 = fixtures::r2();
//! assert_eq!(fixpoint::ind_predicate(&r2).to_string(), "{a,b}");
//! assert_eq!(fixpoint::coind_predicate(&r2).to_string(), "{c}");
//!
//! let v = Predicate::from_atoms(r2.carrier(), ["b", "c"]).unwrap();
//! assert_eq!(fixpoint::positivity(&r2, &v).unwrap().to_string(), "{c}");
//! ```

pub mod basictopology;
pub mod cli;
pub mod encodings;
pub mod error;
pub mod fixpoint;
pub mod fixtures;
pub mod operators;
pub mod proofobjects;
pub mod ruleset;

pub use error::{Error, Result};
pub use ruleset::{Atom, Carrier, IndexedContainer, Predicate, Rule, RuleSet, RuleSetDef};
