//! The on-disk envelope `{"kind", "payload", "version"}` and its payloads.
//!
//! Emission goes through `serde_json::Value`, whose maps are ordered, so
//! every object is written with sorted keys, two-space indentation and a
//! trailing newline. Parsing the emitted bytes and emitting again yields the
//! same bytes.

use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::proofobjects::{CoinductionWitness, CoverProof, DerivationTree};
use crate::ruleset::Atom;

pub const VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Ruleset,
    Container,
    Subset,
    Derivation,
    Witness,
    Report,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Ruleset => "ruleset",
            Kind::Container => "container",
            Kind::Subset => "subset",
            Kind::Derivation => "derivation",
            Kind::Witness => "witness",
            Kind::Report => "report",
        };
        f.write_str(s)
    }
}

/// Payload of a `derivation` document: a plain derivation tree, or a cover
/// proof together with the `V` it covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase", deny_unknown_fields)]
pub enum DerivationPayload {
    Ind { tree: DerivationTree },
    Cover { v: Vec<Atom>, proof: CoverProof },
}

pub type WitnessPayload = CoinductionWitness;

/// A malformed document: where, and what was wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for FormatError {}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope<T> {
    kind: Kind,
    version: u64,
    payload: T,
}

/// Serializes `payload` under the envelope for `kind`.
pub fn emit<T: Serialize>(kind: Kind, payload: &T) -> String {
    let payload = serde_json::to_value(payload).expect("payloads serialize to JSON");
    let doc = serde_json::json!({
        "kind": kind,
        "version": VERSION,
        "payload": payload,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
    s.push('\n');
    s
}

/// Reads only the envelope's `kind`, checking the version.
pub fn peek_kind(source: &str, text: &str) -> Result<Kind, FormatError> {
    let env: Envelope<Value> = serde_json::from_str(text).map_err(|e| json_error(source, &e))?;
    check_version(source, env.version)?;
    Ok(env.kind)
}

/// Parses a document of the expected kind into its typed payload.
pub fn parse<T: DeserializeOwned>(
    source: &str,
    text: &str,
    expected: Kind,
) -> Result<T, FormatError> {
    let kind = peek_kind(source, text)?;
    if kind != expected {
        return Err(FormatError {
            location: format!("{source}: kind"),
            message: format!("expected a {expected} document, found {kind}"),
        });
    }
    let env: Envelope<T> = serde_json::from_str(text).map_err(|e| json_error(source, &e))?;
    Ok(env.payload)
}

fn check_version(source: &str, version: u64) -> Result<(), FormatError> {
    if version != VERSION {
        return Err(FormatError {
            location: format!("{source}: version"),
            message: format!("unsupported version {version}, expected {VERSION}"),
        });
    }
    Ok(())
}

fn json_error(source: &str, e: &serde_json::Error) -> FormatError {
    FormatError {
        location: format!("{source}:{}:{}", e.line(), e.column()),
        message: e.to_string(),
    }
}
