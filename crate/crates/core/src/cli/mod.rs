//! The `cofix` command line.
//!
//! Exit codes: 0 success, 1 semantic failure (underivable element, invalid
//! certificate, failed law), 2 malformed input or usage error, 3 a
//! combinatorial bound was exceeded.

pub mod document;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::basictopology::{check_basic_topology, check_generated_axioms, Sampling};
use crate::encodings::{
    conf_as_der, container_of_ruleset, enlarge, restrict, ruleset_of_container,
};
use crate::error::Error;
use crate::fixpoint::{
    coind_trace, cover_trace, ind_trace, oracle_gfp_bounded, oracle_lfp_bounded, positivity_trace,
    verify_closed, verify_consistent, FixpointTrace,
};
use crate::proofobjects::{
    build_coind_witness, check_cover_proof, check_derivation, derive, derive_cover,
    verify_coind_witness, CoinductionWitness,
};
use crate::ruleset::{Atom, ContainerDef, Predicate, RuleSet, RuleSetDef};

pub use document::{emit, parse, peek_kind, DerivationPayload, FormatError, Kind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SEMANTIC: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cofix",
    version,
    about = "Inductive and coinductive predicates over finite rule sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Least fixed point of der (ind) or greatest fixed point of conf (coind).
    Solve {
        #[arg(long)]
        ruleset: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        trace: TraceOut,
    },
    /// The generated cover `{a | a ◁ V}`.
    Cover {
        #[arg(long)]
        ruleset: PathBuf,
        #[arg(long)]
        v: PathBuf,
        #[command(flatten)]
        trace: TraceOut,
    },
    /// The generated positivity relation `{a | a ⋉ V}`.
    Pos {
        #[arg(long)]
        ruleset: PathBuf,
        #[arg(long)]
        v: PathBuf,
        #[command(flatten)]
        trace: TraceOut,
    },
    /// Derivation (or, with --v, cover proof) of one element.
    Derive {
        #[arg(long)]
        ruleset: PathBuf,
        #[arg(long)]
        v: Option<PathBuf>,
        #[arg(long)]
        element: String,
    },
    /// Coinduction (or, with --v, positivity) witness for one element.
    Witness {
        #[arg(long)]
        ruleset: PathBuf,
        #[arg(long)]
        v: Option<PathBuf>,
        #[arg(long)]
        element: String,
    },
    /// One destructor step on a witness, printing the re-rooted witness.
    Unfold {
        #[arg(long)]
        witness: PathBuf,
        #[arg(long)]
        rule: String,
    },
    /// Check a certificate: derivation, witness, or a subset with --property.
    Verify {
        #[arg(long)]
        ruleset: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, value_enum)]
        property: Option<Property>,
        #[arg(long)]
        v: Option<PathBuf>,
    },
    /// Apply an encoding and print the resulting document.
    Encode {
        #[arg(long)]
        ruleset: PathBuf,
        #[arg(long, value_enum)]
        transform: Transform,
        #[arg(long)]
        v: Option<PathBuf>,
    },
    /// Brute-force fixed points over every subset, compared with the solver.
    Oracle {
        #[arg(long)]
        ruleset: PathBuf,
        #[arg(long)]
        v: Option<PathBuf>,
        #[arg(long, default_value_t = crate::fixpoint::DEFAULT_ORACLE_BOUND)]
        bound: usize,
    },
    /// Basic-topology law report.
    Laws {
        #[arg(long)]
        ruleset: PathBuf,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Inductive vs coinductive predicate and their complementarity.
    Dual {
        #[arg(long)]
        ruleset: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct TraceOut {
    /// Write the Kleene iterates as a report document.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SamplingArgs {
    #[arg(long, conflicts_with_all = ["samples", "seed"])]
    pub exhaustive: bool,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Ind,
    Coind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Closed,
    Consistent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Transform {
    Enlarge,
    Restrict,
    ToContainer,
    ToRuleset,
    ConfAsDer,
}

/// A failed command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn malformed(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_MALFORMED,
            message: message.into(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::malformed(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::BoundExceeded { .. } => EXIT_BOUND,
            Error::UnknownElement(_)
            | Error::UnknownRule { .. }
            | Error::CarrierMismatch
            | Error::DuplicateElement(_)
            | Error::InvalidRuleSet(_)
            | Error::InvalidContainer(_) => EXIT_MALFORMED,
            _ => EXIT_SEMANTIC,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_MALFORMED
            } else {
                EXIT_OK
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))
}

fn source(path: &Path) -> String {
    path.display().to_string()
}

pub fn load_ruleset(path: &Path) -> Result<RuleSet, Failure> {
    let def: RuleSetDef = parse(&source(path), &read(path)?, Kind::Ruleset)?;
    def.build()
        .map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))
}

pub fn load_subset(path: &Path, r: &RuleSet) -> Result<Predicate, Failure> {
    let atoms: Vec<Atom> = parse(&source(path), &read(path)?, Kind::Subset)?;
    Predicate::from_atoms(r.carrier(), &atoms)
        .map_err(|e| Failure::malformed(format!("{}: {e}", path.display())))
}

fn load_optional_subset(path: Option<&PathBuf>, r: &RuleSet) -> Result<Option<Predicate>, Failure> {
    path.map(|p| load_subset(p, r)).transpose()
}

fn require_v<'a>(v: Option<&'a PathBuf>, what: &str) -> Result<&'a PathBuf, Failure> {
    v.ok_or_else(|| Failure::malformed(format!("{what} needs --v")))
}

/// The trace as a `report` document payload.
pub fn trace_payload(mode: &str, trace: &FixpointTrace) -> serde_json::Value {
    let carrier = trace.result().carrier();
    let rank: BTreeMap<&Atom, Option<usize>> = carrier
        .elements()
        .iter()
        .zip(&trace.rank)
        .map(|(a, &k)| (a, k))
        .collect();
    json!({
        "report": "trace",
        "mode": mode,
        "fixpoint": trace.kind,
        "stages": trace.stages,
        "rank": rank,
    })
}

fn solved(out: &mut dyn Write, mode: &str, trace: &FixpointTrace, trace_out: &TraceOut) -> Outcome {
    writeln!(out, "{}", trace.result()).ok();
    if let Some(path) = &trace_out.trace {
        write_file(path, &emit(Kind::Report, &trace_payload(mode, trace)))?;
    }
    Ok(EXIT_OK)
}

fn print_doc<T: Serialize>(out: &mut dyn Write, kind: Kind, payload: &T) -> Outcome {
    write!(out, "{}", emit(kind, payload)).ok();
    Ok(EXIT_OK)
}

fn verdict(out: &mut dyn Write, ok: bool, detail: impl std::fmt::Display) -> Outcome {
    if ok {
        writeln!(out, "valid").ok();
        Ok(EXIT_OK)
    } else {
        writeln!(out, "invalid: {detail}").ok();
        Ok(EXIT_SEMANTIC)
    }
}

fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Solve {
            ruleset,
            mode,
            trace,
        } => {
            let r = load_ruleset(ruleset)?;
            match mode {
                Mode::Ind => solved(out, "ind", &ind_trace(&r), trace),
                Mode::Coind => solved(out, "coind", &coind_trace(&r), trace),
            }
        }
        Command::Cover { ruleset, v, trace } => {
            let r = load_ruleset(ruleset)?;
            let v = load_subset(v, &r)?;
            solved(out, "cover", &cover_trace(&r, &v)?, trace)
        }
        Command::Pos { ruleset, v, trace } => {
            let r = load_ruleset(ruleset)?;
            let v = load_subset(v, &r)?;
            solved(out, "pos", &positivity_trace(&r, &v)?, trace)
        }
        Command::Derive {
            ruleset,
            v,
            element,
        } => {
            let r = load_ruleset(ruleset)?;
            r.carrier().require(element)?;
            let payload = match load_optional_subset(v.as_ref(), &r)? {
                None => DerivationPayload::Ind {
                    tree: derive(&r, element)?,
                },
                Some(v) => DerivationPayload::Cover {
                    proof: derive_cover(&r, &v, element)?,
                    v: v.sorted_atoms(),
                },
            };
            print_doc(out, Kind::Derivation, &payload)
        }
        Command::Witness {
            ruleset,
            v,
            element,
        } => {
            let r = load_ruleset(ruleset)?;
            r.carrier().require(element)?;
            let v = load_optional_subset(v.as_ref(), &r)?;
            let w = build_coind_witness(&r, element, v.as_ref())?;
            print_doc(out, Kind::Witness, &w)
        }
        Command::Unfold { witness, rule } => {
            let w: CoinductionWitness = parse(&source(witness), &read(witness)?, Kind::Witness)?;
            let (z, next) = w.des(rule)?;
            writeln!(err, "{} --{}--> {}", w.start, rule, z).ok();
            print_doc(out, Kind::Witness, &next)
        }
        Command::Verify {
            ruleset,
            cert,
            property,
            v,
        } => {
            let r = load_ruleset(ruleset)?;
            let text = read(cert)?;
            let src = source(cert);
            match peek_kind(&src, &text)? {
                Kind::Derivation => {
                    match parse::<DerivationPayload>(&src, &text, Kind::Derivation)? {
                        DerivationPayload::Ind { tree } => {
                            let res = check_derivation(&r, &tree);
                            verdict(
                                out,
                                res.is_ok(),
                                res.err().map(|f| f.to_string()).unwrap_or_default(),
                            )
                        }
                        DerivationPayload::Cover { v, proof } => {
                            let v = Predicate::from_atoms(r.carrier(), &v).map_err(|e| {
                                Failure::malformed(format!("{src}: payload.v: {e}"))
                            })?;
                            let res = check_cover_proof(&r, &v, &proof);
                            verdict(
                                out,
                                res.is_ok(),
                                res.err().map(|f| f.to_string()).unwrap_or_default(),
                            )
                        }
                    }
                }
                Kind::Witness => {
                    let w: CoinductionWitness = parse(&src, &text, Kind::Witness)?;
                    let res = verify_coind_witness(&r, &w);
                    verdict(
                        out,
                        res.is_ok(),
                        res.err().map(|f| f.to_string()).unwrap_or_default(),
                    )
                }
                Kind::Subset => {
                    let p = load_subset(cert, &r)?;
                    let v = load_optional_subset(v.as_ref(), &r)?;
                    let property = property.ok_or_else(|| {
                        Failure::malformed("verifying a subset needs --property closed|consistent")
                    })?;
                    let (ok, name) = match property {
                        Property::Closed => (verify_closed(&r, v.as_ref(), &p)?, "closed"),
                        Property::Consistent => {
                            (verify_consistent(&r, v.as_ref(), &p)?, "consistent")
                        }
                    };
                    verdict(out, ok, format!("{p} is not {name}"))
                }
                other => Err(Failure::malformed(format!(
                    "{src}: cannot verify a {other} document"
                ))),
            }
        }
        Command::Encode {
            ruleset,
            transform,
            v,
        } => {
            if *transform == Transform::ToRuleset {
                let def: ContainerDef = parse(&source(ruleset), &read(ruleset)?, Kind::Container)?;
                let k = def
                    .build()
                    .map_err(|e| Failure::malformed(format!("{}: {e}", ruleset.display())))?;
                return print_doc(out, Kind::Ruleset, &ruleset_of_container(&k).to_def());
            }
            let r = load_ruleset(ruleset)?;
            match transform {
                Transform::Enlarge => {
                    let v = load_subset(require_v(v.as_ref(), "enlarge")?, &r)?;
                    print_doc(out, Kind::Ruleset, &enlarge(&r, &v)?.to_def())
                }
                Transform::Restrict => {
                    let v = load_subset(require_v(v.as_ref(), "restrict")?, &r)?;
                    print_doc(out, Kind::Ruleset, &restrict(&r, &v)?.to_def())
                }
                Transform::ToContainer => {
                    print_doc(out, Kind::Container, &container_of_ruleset(&r).to_def())
                }
                Transform::ConfAsDer => print_doc(out, Kind::Container, &conf_as_der(&r)?.to_def()),
                Transform::ToRuleset => unreachable!("handled above"),
            }
        }
        Command::Oracle { ruleset, v, bound } => {
            let r = load_ruleset(ruleset)?;
            let v = load_optional_subset(v.as_ref(), &r)?;
            let lo = oracle_lfp_bounded(&r, v.as_ref(), *bound)?;
            let hi = oracle_gfp_bounded(&r, v.as_ref(), *bound)?;
            let (solver_lo, solver_hi) = match &v {
                None => (
                    ind_trace(&r).result().clone(),
                    coind_trace(&r).result().clone(),
                ),
                Some(v) => (
                    cover_trace(&r, v)?.result().clone(),
                    positivity_trace(&r, v)?.result().clone(),
                ),
            };
            writeln!(out, "lfp {lo}").ok();
            writeln!(out, "gfp {hi}").ok();
            if lo == solver_lo && hi == solver_hi {
                writeln!(out, "solver agrees").ok();
                Ok(EXIT_OK)
            } else {
                writeln!(out, "solver disagrees: lfp {solver_lo}, gfp {solver_hi}").ok();
                Ok(EXIT_SEMANTIC)
            }
        }
        Command::Laws { ruleset, sampling } => {
            let r = load_ruleset(ruleset)?;
            let mode = if sampling.exhaustive {
                Sampling::Exhaustive
            } else if sampling.samples.is_some() || sampling.seed.is_some() {
                Sampling::Random {
                    samples: sampling
                        .samples
                        .unwrap_or(crate::basictopology::DEFAULT_SAMPLES),
                    seed: sampling.seed.unwrap_or(0),
                }
            } else {
                Sampling::default_for(&r)
            };
            let laws = check_basic_topology(&r, mode)?;
            let axioms = check_generated_axioms(&r)?;
            let passed = laws.passed && axioms.passed;
            print_doc(
                out,
                Kind::Report,
                &json!({
                    "report": "laws",
                    "passed": passed,
                    "laws": laws,
                    "axioms": axioms,
                }),
            )?;
            Ok(if passed { EXIT_OK } else { EXIT_SEMANTIC })
        }
        Command::Dual { ruleset } => {
            let r = load_ruleset(ruleset)?;
            let d = crate::encodings::complement_dual(&r);
            writeln!(out, "ind {}", d.ind).ok();
            writeln!(out, "coind {}", d.coind).ok();
            writeln!(out, "complementary {}", d.complementary).ok();
            Ok(if d.complementary {
                EXIT_OK
            } else {
                EXIT_SEMANTIC
            })
        }
    }
}
