//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use cofix::basictopology::{check_basic_topology, check_generated_axioms, Law, Sampling};
use cofix::cli::document::{emit, parse, peek_kind, DerivationPayload, Kind};
use cofix::cli::{EXIT_BOUND, EXIT_MALFORMED, EXIT_OK, EXIT_SEMANTIC};
use cofix::encodings::{
    complement_dual, conf_as_der, container_of_ruleset, cover_via_enlargement,
    dwtree_of_derivation, positivity_via_restriction, ruleset_of_container,
};
use cofix::fixpoint::{
    coind_predicate, cover, cover_trace, ind_predicate, oracle_gfp, oracle_lfp, positivity,
};
use cofix::operators::{
    conf, conf_container, conf_v, der, der_container, der_v, is_closed, is_closed_v, is_consistent,
    is_consistent_v,
};
use cofix::proofobjects::{
    build_coind_witness, check_cover_proof, check_derivation, derive, derive_cover, dw_recursor,
    eval_cover_recursor, eval_ind_recursor, verify_coind_witness, wtree_recursor, wtree_sup,
    CoinductionWitness, CoverProof, DerivationTree, Signature, WTree,
};
use cofix::ruleset::ContainerDef;
use cofix::{fixtures, Atom, Predicate, RuleSet, RuleSetDef};
use common::{hash_of, instances, rng, set, subsets, Naive};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Fixtures plus 500 seeded random rule sets over at most four elements.
fn corpus() -> Vec<(String, RuleSet)> {
    instances(500, 4, 2024)
}

fn criterion_1_oracle_equivalence(corpus: &[(String, RuleSet)]) -> Outcome {
    let mut comparisons = 0usize;
    for (name, r) in corpus {
        let naive = Naive::of(&r.to_def());
        let everything: BTreeSet<Atom> = r.carrier().elements().iter().cloned().collect();
        let ind = ind_predicate(r);
        let coind = coind_predicate(r);
        ensure!(
            set(&ind) == naive.least(&BTreeSet::new()),
            "{name}: ind {ind}"
        );
        ensure!(
            set(&coind) == naive.greatest(&everything),
            "{name}: coind {coind}"
        );
        ensure!(
            oracle_lfp(r, None).unwrap() == ind,
            "{name}: oracle_lfp disagrees on ind"
        );
        ensure!(
            oracle_gfp(r, None).unwrap() == coind,
            "{name}: oracle_gfp disagrees on coind"
        );
        for v in subsets(r) {
            let c = cover(r, &v).unwrap();
            let p = positivity(r, &v).unwrap();
            ensure!(set(&c) == naive.least(&set(&v)), "{name}: cover at V = {v}");
            ensure!(
                set(&p) == naive.greatest(&set(&v)),
                "{name}: positivity at V = {v}"
            );
            ensure!(
                oracle_lfp(r, Some(&v)).unwrap() == c,
                "{name}: oracle_lfp at V = {v}"
            );
            ensure!(
                oracle_gfp(r, Some(&v)).unwrap() == p,
                "{name}: oracle_gfp at V = {v}"
            );
            comparisons += 4;
        }
    }
    Ok(format!(
        "{} instances, {comparisons} (V-)fixed points",
        corpus.len()
    ))
}

fn criterion_2_duality(corpus: &[(String, RuleSet)]) -> Outcome {
    for (name, r) in corpus {
        let d = complement_dual(r);
        ensure!(
            d.complementary,
            "{name}: ind {} vs coind {}",
            d.ind,
            d.coind
        );
        ensure!(
            ind_predicate(r).complement() == coind_predicate(r),
            "{name}"
        );
    }
    Ok(format!("{} instances", corpus.len()))
}

fn criterion_3_fixed_point_laws(corpus: &[(String, RuleSet)]) -> Outcome {
    for (name, r) in corpus {
        let ind = ind_predicate(r);
        let coind = coind_predicate(r);
        ensure!(der(r, &ind).unwrap() == ind, "{name}: der(ind) ≠ ind");
        ensure!(
            conf(r, &coind).unwrap() == coind,
            "{name}: conf(coind) ≠ coind"
        );
        for v in subsets(r) {
            let c = cover(r, &v).unwrap();
            let p = positivity(r, &v).unwrap();
            ensure!(
                der_v(r, &v, &c).unwrap() == c,
                "{name}: cover not fixed at V = {v}"
            );
            ensure!(
                conf_v(r, &v, &p).unwrap() == p,
                "{name}: positivity not fixed at V = {v}"
            );
        }
    }
    Ok(format!("{} instances, all V", corpus.len()))
}

fn criterion_4_universal_properties(corpus: &[(String, RuleSet)]) -> Outcome {
    let mut checked = 0usize;
    for (name, r) in corpus {
        let ind = ind_predicate(r);
        let coind = coind_predicate(r);
        let all = subsets(r);
        for p in &all {
            if is_closed(r, p).unwrap() {
                ensure!(ind.leq(p).unwrap(), "{name}: ind ⊄ closed {p}");
            }
            if is_consistent(r, p).unwrap() {
                ensure!(p.leq(&coind).unwrap(), "{name}: consistent {p} ⊄ coind");
            }
            checked += 1;
        }
        for v in &all {
            let c = cover(r, v).unwrap();
            let pos = positivity(r, v).unwrap();
            ensure!(is_closed_v(r, v, &c).unwrap(), "{name}: cover not V-closed");
            ensure!(
                is_consistent_v(r, v, &pos).unwrap(),
                "{name}: positivity not V-consistent"
            );
            for p in &all {
                if is_closed_v(r, v, p).unwrap() {
                    ensure!(c.leq(p).unwrap(), "{name}: cover({v}) ⊄ V-closed {p}");
                }
                if is_consistent_v(r, v, p).unwrap() {
                    ensure!(
                        p.leq(&pos).unwrap(),
                        "{name}: V-consistent {p} ⊄ positivity({v})"
                    );
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} predicates checked"))
}

fn criterion_5_encodings(corpus: &[(String, RuleSet)]) -> Outcome {
    let mut checked = 0usize;
    for (name, r) in corpus {
        let full = Predicate::full(r.carrier());
        let empty = Predicate::empty(r.carrier());
        ensure!(
            cover(r, &empty).unwrap() == ind_predicate(r),
            "{name}: (iii) cover(∅) ≠ ind"
        );
        ensure!(
            positivity(r, &full).unwrap() == coind_predicate(r),
            "{name}: (iii) pos(A) ≠ coind"
        );
        for v in subsets(r) {
            ensure!(
                cover_via_enlargement(r, &v).unwrap() == cover(r, &v).unwrap(),
                "{name}: (i) at V = {v}"
            );
            ensure!(
                positivity_via_restriction(r, &v).unwrap() == positivity(r, &v).unwrap(),
                "{name}: (ii) at V = {v}"
            );
        }
        let choices = conf_as_der(r).unwrap();
        let k = container_of_ruleset(r);
        let back = ruleset_of_container(&k);
        ensure!(
            back == *r,
            "{name}: container round trip changed the rule set"
        );
        for p in subsets(r) {
            ensure!(
                conf(r, &p).unwrap() == der_container(&choices, &p).unwrap(),
                "{name}: (iv) at P = {p}"
            );
            ensure!(
                der(r, &p).unwrap() == der_container(&k, &p).unwrap(),
                "{name}: (v) der at {p}"
            );
            ensure!(
                conf(r, &p).unwrap() == conf_container(&k, &p).unwrap(),
                "{name}: (v) conf at {p}"
            );
            ensure!(
                der(&back, &p).unwrap() == der_container(&k, &p).unwrap(),
                "{name}: (v) der back at {p}"
            );
            ensure!(
                conf(&back, &p).unwrap() == conf_container(&k, &p).unwrap(),
                "{name}: (v) conf back at {p}"
            );
            checked += 1;
        }
    }
    Ok(format!(
        "(i)-(v) on {} instances, {checked} predicates",
        corpus.len()
    ))
}

/// Arbitrary, mostly ill-formed derivation candidates: any rule id the
/// element owns (or a bogus one), children keyed by random atoms.
fn random_candidate<R: Rng>(r: &RuleSet, x: usize, depth: usize, g: &mut R) -> DerivationTree {
    let carrier = r.carrier();
    let rules = r.rules_of(x);
    let rule = if rules.is_empty() || g.gen_bool(0.05) {
        Atom::from("bogus")
    } else {
        rules.choose(g).unwrap().id.clone()
    };
    let mut children = BTreeMap::new();
    if depth > 1 {
        let premises: Vec<usize> = rules
            .iter()
            .find(|rl| rl.id == rule)
            .map(|rl| rl.premises.members().collect())
            .unwrap_or_default();
        for z in premises {
            if g.gen_bool(0.95) {
                let target = if g.gen_bool(0.9) {
                    z
                } else {
                    g.gen_range(0..carrier.len())
                };
                children.insert(
                    carrier.atom(z).clone(),
                    random_candidate(r, target, depth - 1, g),
                );
            }
        }
    }
    DerivationTree {
        conclusion: carrier.atom(x).clone(),
        rule,
        children,
    }
}

fn random_witness<R: Rng>(r: &RuleSet, v: Option<&Predicate>, g: &mut R) -> CoinductionWitness {
    let carrier = r.carrier();
    let n = carrier.len();
    let support: BTreeSet<Atom> = (0..n)
        .filter(|_| g.gen_bool(0.6))
        .map(|i| carrier.atom(i).clone())
        .collect();
    let start = carrier.atom(g.gen_range(0..n)).clone();
    let continuations = support
        .iter()
        .map(|a| {
            let x = carrier.position(a.as_str()).unwrap();
            let conts = r
                .rules_of(x)
                .iter()
                .map(|rule| {
                    let members: Vec<usize> = rule.premises.members().collect();
                    let z = if members.is_empty() || g.gen_bool(0.1) {
                        g.gen_range(0..n)
                    } else {
                        *members.choose(g).unwrap()
                    };
                    (rule.id.clone(), carrier.atom(z).clone())
                })
                .collect();
            (a.clone(), conts)
        })
        .collect();
    CoinductionWitness {
        start,
        support,
        v: v.map(Predicate::atom_set),
        continuations,
    }
}

fn criterion_6_certificates(corpus: &[(String, RuleSet)]) -> Outcome {
    let mut g = rng(6);
    let (mut extracted, mut candidates_valid, mut witnesses, mut random_valid, mut steps) =
        (0, 0, 0, 0, 0);
    for (name, r) in corpus {
        let n = r.carrier().len();
        let ind = ind_predicate(r);
        let coind = coind_predicate(r);
        // Completeness: every member yields a checker-valid certificate.
        for x in ind.members() {
            let a = r.carrier().atom(x).as_str();
            let t = derive(r, a).map_err(|e| format!("{name}: {a}: {e}"))?;
            ensure!(
                check_derivation(r, &t).is_ok(),
                "{name}: extracted tree for {a} rejected"
            );
            extracted += 1;
        }
        for v in subsets(r).into_iter().take(32) {
            let c = cover(r, &v).unwrap();
            for x in c.members() {
                let a = r.carrier().atom(x).as_str();
                let p = derive_cover(r, &v, a).map_err(|e| format!("{name}: {a} ◁ {v}: {e}"))?;
                ensure!(
                    check_cover_proof(r, &v, &p).is_ok(),
                    "{name}: cover proof for {a} rejected"
                );
                extracted += 1;
            }
            for x in 0..n {
                let a = r.carrier().atom(x).as_str();
                if c.contains(x) {
                    continue;
                }
                ensure!(
                    derive_cover(r, &v, a).is_err(),
                    "{name}: proof for non-member {a} ◁ {v}"
                );
            }
            let pos = positivity(r, &v).unwrap();
            for x in pos.members() {
                let a = r.carrier().atom(x).as_str();
                let w =
                    build_coind_witness(r, a, Some(&v)).map_err(|e| format!("{name}: {a}: {e}"))?;
                ensure!(
                    verify_coind_witness(r, &w).is_ok(),
                    "{name}: positivity witness for {a} rejected"
                );
                ensure!(
                    w.corf().is_ok_and(|m| v.contains_atom(m.element.as_str())),
                    "{name}: corf"
                );
                witnesses += 1;
            }
        }
        for x in coind.members() {
            let a = r.carrier().atom(x).as_str();
            let w = build_coind_witness(r, a, None).map_err(|e| format!("{name}: {a}: {e}"))?;
            ensure!(
                verify_coind_witness(r, &w).is_ok(),
                "{name}: witness for {a} rejected"
            );
            witnesses += 1;
            // des keeps us inside the coinductive predicate, and the re-rooted
            // witness is itself valid.
            for rule in r.rules_of(x) {
                let (z, next) = w
                    .des(rule.id.as_str())
                    .map_err(|e| format!("{name}: des: {e}"))?;
                ensure!(
                    rule.premises.contains_atom(z.as_str()),
                    "{name}: des left the premises"
                );
                ensure!(
                    coind.contains_atom(z.as_str()),
                    "{name}: des left coind at {z}"
                );
                ensure!(
                    verify_coind_witness(r, &next).is_ok(),
                    "{name}: re-rooted witness rejected"
                );
                steps += 1;
            }
        }
        // Soundness: whatever the checkers accept concludes inside the predicate.
        for _ in 0..20 {
            let x = g.gen_range(0..n.max(1));
            if n == 0 {
                break;
            }
            let t = random_candidate(r, x, 5, &mut g);
            if check_derivation(r, &t).is_ok() {
                ensure!(
                    ind.contains_atom(t.conclusion.as_str()),
                    "{name}: valid tree for non-member"
                );
                candidates_valid += 1;
            }
            let v = Predicate::from_mask(r.carrier(), g.gen_range(0..1u64 << n));
            let use_v = g.gen_bool(0.5);
            let w = random_witness(r, use_v.then_some(&v), &mut g);
            if verify_coind_witness(r, &w).is_ok() {
                let target = if use_v {
                    positivity(r, &v).unwrap()
                } else {
                    coind.clone()
                };
                ensure!(
                    target.contains_atom(w.start.as_str()),
                    "{name}: valid witness for non-member"
                );
                random_valid += 1;
            }
        }
    }
    ensure!(
        candidates_valid > 100 && random_valid > 100,
        "too few valid random certificates"
    );
    Ok(format!(
        "{extracted} extracted proofs, {witnesses} witnesses, {steps} des steps; \
         {candidates_valid} random trees and {random_valid} random witnesses accepted, all sound"
    ))
}

fn random_wtree<R: Rng>(sig: &Signature, depth: usize, g: &mut R) -> WTree {
    let labels: Vec<&Atom> = sig
        .labels()
        .iter()
        .filter(|l| depth > 1 || sig.branches(l.as_str()).unwrap().is_empty())
        .collect();
    let label = labels.choose(g).unwrap().as_str();
    let subtrees = sig
        .branches(label)
        .unwrap()
        .iter()
        .map(|b| {
            (
                b.clone(),
                random_wtree(sig, g.gen_range(1..depth.max(2)), g),
            )
        })
        .collect();
    wtree_sup(sig, label, subtrees).unwrap()
}

fn criterion_7_conversion_rules() -> Outcome {
    let mut g = rng(7);
    let (mut c_ind, mut c_rf, mut c_tr, mut c_w, mut c_dw) = (0, 0, 0, 0, 0);
    let motive = |a: &Atom, i: &Atom, rs: BTreeMap<Atom, u64>| hash_of(&(a, i, rs));
    let mut seed = 0u64;
    while c_ind < 200 || c_rf < 200 || c_tr < 200 || c_dw < 200 {
        seed += 1;
        let r = fixtures::random_ruleset(&mut rng(seed), 6);
        let n = r.carrier().len();
        let x = r.carrier().atom(g.gen_range(0..n)).clone();
        if let Some(t) = common::random_derivation(&r, x.as_str(), 5, &mut g) {
            ensure!(t.depth() <= 5, "generated tree too deep");
            // C-Ind: El(ind(a,i,p)) = step(a, i, λz. El(p(z)))
            let lhs = eval_ind_recursor(&r, &t, motive).unwrap();
            let rec: BTreeMap<Atom, u64> = t
                .children
                .iter()
                .map(|(z, c)| (z.clone(), eval_ind_recursor(&r, c, motive).unwrap()))
                .collect();
            ensure!(
                lhs == motive(&t.conclusion, &t.rule, rec),
                "C-Ind fails on {t:?}"
            );
            c_ind += 1;
            // C-DW on the same derivation read as a dependent W-tree.
            let k = container_of_ruleset(&r);
            let dw = dwtree_of_derivation(&r, &t).unwrap();
            let mut d = |a: &Atom, i: &Atom, _: &BTreeMap<Atom, _>, rs: BTreeMap<Atom, u64>| {
                hash_of(&(a, i, rs))
            };
            let lhs = dw_recursor(&dw, &mut d);
            let rec: BTreeMap<Atom, u64> = dw
                .subtrees()
                .iter()
                .map(|(z, s)| (z.clone(), dw_recursor(s, &mut d)))
                .collect();
            ensure!(
                lhs == d(dw.label(), dw.option(), dw.subtrees(), rec),
                "C-DW fails"
            );
            ensure!(
                cofix::proofobjects::check_dwtree(&k, &dw).is_ok(),
                "DW coherence"
            );
            ensure!(
                cofix::encodings::derivation_of_dwtree(&dw) == t,
                "DW round trip"
            );
            c_dw += 1;
        }
        let v = Predicate::from_mask(r.carrier(), g.gen_range(0..1u64 << n));
        if let Some(p) = common::random_cover_proof(&r, &v, x.as_str(), 5, &mut g) {
            let q1 = |a: &Atom| hash_of(&("rf", a));
            let q2 = |a: &Atom, i: &Atom, rs: BTreeMap<Atom, u64>| hash_of(&("tr", a, i, rs));
            let lhs = eval_cover_recursor(&r, &v, &p, q1, q2).unwrap();
            match &p {
                CoverProof::Rf { conclusion } => {
                    ensure!(lhs == q1(conclusion), "C-rf fails");
                    c_rf += 1;
                }
                CoverProof::Tr {
                    conclusion,
                    rule,
                    children,
                } => {
                    let rec = children
                        .iter()
                        .map(|(z, c)| (z.clone(), eval_cover_recursor(&r, &v, c, q1, q2).unwrap()))
                        .collect();
                    ensure!(lhs == q2(conclusion, rule, rec), "C-tr fails");
                    c_tr += 1;
                }
            }
        }
    }
    let sigs = [
        Signature::binary_tree(),
        Signature::new([("nil", vec![]), ("cons", vec!["tail"])]).unwrap(),
        Signature::new([
            ("z", vec![]),
            ("one", vec!["x"]),
            ("three", vec!["p", "q", "r"]),
        ])
        .unwrap(),
    ];
    while c_w < 300 {
        let sig = &sigs[c_w % sigs.len()];
        let t = random_wtree(sig, g.gen_range(1..=5), &mut g);
        let mut d =
            |a: &Atom, _: &BTreeMap<Atom, WTree>, rs: BTreeMap<Atom, u64>| hash_of(&(a, rs));
        let lhs = wtree_recursor(&t, &mut d);
        let rec = t
            .subtrees()
            .iter()
            .map(|(y, s)| (y.clone(), wtree_recursor(s, &mut d)))
            .collect();
        ensure!(lhs == d(t.label(), t.subtrees(), rec), "C-W fails");
        c_w += 1;
    }
    Ok(format!(
        "C-Ind {c_ind}, C-rf {c_rf}, C-tr {c_tr}, C-W {c_w}, C-DW {c_dw}"
    ))
}

fn criterion_8_basic_topology() -> Outcome {
    let corpus = instances(100, 4, 8);
    let mut literal_failures = BTreeMap::new();
    let mut triples = 0usize;
    for (name, r) in &corpus {
        let report =
            check_basic_topology(r, Sampling::Exhaustive).map_err(|e| format!("{name}: {e}"))?;
        for law in &report.laws {
            if law.law.gating() {
                ensure!(
                    law.holds,
                    "{name}: {:?} fails: {:?}",
                    law.law,
                    law.counterexamples
                );
                triples += law.checked as usize;
            } else if !law.holds {
                *literal_failures
                    .entry(format!("{:?}", law.law))
                    .or_insert(0usize) += 1;
            }
        }
        ensure!(report.passed, "{name}: report not passed");
        for law in [
            Law::Reflexivity,
            Law::Transitivity,
            Law::Coreflexivity,
            Law::Cotransitivity,
            Law::Compatibility,
        ] {
            ensure!(report.law(law).is_some(), "{name}: {law:?} not checked");
        }
        let axioms = check_generated_axioms(r).map_err(|e| format!("{name}: {e}"))?;
        ensure!(axioms.passed, "{name}: generated axioms fail");
    }
    let literal = if literal_failures.is_empty() {
        "literal forms hold everywhere".to_string()
    } else {
        let parts: Vec<String> = literal_failures
            .iter()
            .map(|(k, v)| format!("{k} fails on {v}"))
            .collect();
        format!("informative: {}", parts.join(", "))
    };
    Ok(format!(
        "{} instances, {triples} gating checks; {literal}",
        corpus.len()
    ))
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn cofix(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cofix"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("binary runs")
}

fn criterion_9_baire() -> Outcome {
    let r3 = fixtures::r3();
    let bar = fixtures::r3_bar(&r3);
    let c = cover(&r3, &bar).unwrap();
    ensure!(c.contains_atom("[]"), "[] is not covered by the bar");
    let rank = cover_trace(&r3, &bar).unwrap().rank_of("[]");
    ensure!(rank == Some(3), "[] enters the cover at stage {rank:?}");
    let proof = derive_cover(&r3, &bar, "[]").unwrap();
    ensure!(
        check_cover_proof(&r3, &bar, &proof).is_ok(),
        "cover proof of [] rejected"
    );
    let args = [
        "cover",
        "--ruleset",
        "fixtures/r3.ruleset.json",
        "--v",
        "fixtures/r3-bar.subset.json",
    ];
    let golden = fs::read_to_string(crate_dir().join("tests/golden/r3.cover-bar.txt")).unwrap();
    for _ in 0..3 {
        let o = cofix(&args);
        ensure!(
            o.status.code() == Some(EXIT_OK),
            "cover exited with {:?}",
            o.status
        );
        ensure!(o.stdout == golden.as_bytes(), "output drifted from golden");
    }
    Ok(format!("[] ◁ bar at stage 3, output {}", golden.trim_end()))
}

fn criterion_10_cli_contract() -> Outcome {
    let mut docs = 0;
    for dir in ["fixtures", "tests/golden"] {
        for entry in fs::read_dir(crate_dir().join(dir)).unwrap() {
            let path = entry.unwrap().path();
            if path.extension().is_none_or(|e| e != "json") {
                continue;
            }
            let text = fs::read_to_string(&path).unwrap();
            let src = path.display().to_string();
            let kind = peek_kind(&src, &text).map_err(|e| e.to_string())?;
            let again = match kind {
                Kind::Ruleset => emit(kind, &parse::<RuleSetDef>(&src, &text, kind).unwrap()),
                Kind::Container => emit(kind, &parse::<ContainerDef>(&src, &text, kind).unwrap()),
                Kind::Subset => emit(kind, &parse::<Vec<Atom>>(&src, &text, kind).unwrap()),
                Kind::Derivation => emit(
                    kind,
                    &parse::<DerivationPayload>(&src, &text, kind).unwrap(),
                ),
                Kind::Witness => emit(
                    kind,
                    &parse::<CoinductionWitness>(&src, &text, kind).unwrap(),
                ),
                Kind::Report => emit(
                    kind,
                    &parse::<serde_json::Value>(&src, &text, kind).unwrap(),
                ),
            };
            ensure!(again == text, "{src} is not byte-stable");
            docs += 1;
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    fs::write(&broken, "{ \"kind\": ").unwrap();
    let cases: [(&[&str], i32); 6] = [
        (
            &[
                "solve",
                "--ruleset",
                "fixtures/r2.ruleset.json",
                "--mode",
                "ind",
            ],
            EXIT_OK,
        ),
        (
            &[
                "derive",
                "--ruleset",
                "fixtures/r1.ruleset.json",
                "--element",
                "c",
            ],
            EXIT_SEMANTIC,
        ),
        (
            &[
                "witness",
                "--ruleset",
                "fixtures/r2.ruleset.json",
                "--element",
                "a",
            ],
            EXIT_SEMANTIC,
        ),
        (
            &[
                "solve",
                "--ruleset",
                broken.to_str().unwrap(),
                "--mode",
                "ind",
            ],
            EXIT_MALFORMED,
        ),
        (&["solve", "--mode", "sideways"], EXIT_MALFORMED),
        (
            &[
                "oracle",
                "--ruleset",
                "fixtures/r3.ruleset.json",
                "--bound",
                "5",
            ],
            EXIT_BOUND,
        ),
    ];
    for (args, want) in cases {
        let got = cofix(args).status.code();
        ensure!(
            got == Some(want),
            "{args:?} exited with {got:?}, expected {want}"
        );
    }
    Ok(format!(
        "{docs} documents byte-stable, exit codes 0/1/2/3 observed"
    ))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        (
            "1 oracle equivalence",
            Box::new(|| criterion_1_oracle_equivalence(&corpus)),
        ),
        (
            "2 classical duality",
            Box::new(|| criterion_2_duality(&corpus)),
        ),
        (
            "3 fixed-point laws",
            Box::new(|| criterion_3_fixed_point_laws(&corpus)),
        ),
        (
            "4 universal properties",
            Box::new(|| criterion_4_universal_properties(&corpus)),
        ),
        (
            "5 encoding equalities",
            Box::new(|| criterion_5_encodings(&corpus)),
        ),
        (
            "6 certificate soundness and completeness",
            Box::new(|| criterion_6_certificates(&corpus)),
        ),
        ("7 conversion rules", Box::new(criterion_7_conversion_rules)),
        (
            "8 basic-topology laws",
            Box::new(criterion_8_basic_topology),
        ),
        ("9 Baire truncation", Box::new(criterion_9_baire)),
        ("10 CLI contract", Box::new(criterion_10_cli_contract)),
    ];
    let mut failed = 0;
    for (label, run) in &criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {label}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {label}: {why} ({secs:.2}s)");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
