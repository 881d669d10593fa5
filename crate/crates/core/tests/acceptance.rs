//! Acceptance battery. Each criterion prints exactly one PASS or FAIL line;
//! the process exits nonzero if any criterion fails.
//!
//! The corpus is every associative table of dim <= 2 over F_2 together with
//! the curated algebras E1, E2, M2(F_2) and the pairwise direct products of
//! E1 and E2 (dim 4), with every surjective homomorphism between corpus
//! members enumerated inside a 10^6-case budget.

mod common;

use std::collections::BTreeSet;
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::Instant;

use algext::central::centrality_agreement;
use algext::format::{self, Parsed};
use algext::{
    direct_product, enumerate_actions, weak_actor, Algebra, CheckOutcome, CorpusSpec, Field,
    VerifyReport,
};
use common::Table;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn load_algebra(name: &str) -> Algebra {
    match format::parse_file(&data_dir().join(name)).unwrap() {
        Parsed::Algebra(a) => a,
        other => panic!("{name} holds a {}", other.kind()),
    }
}

/// Writes the curated corpus into `dir`: the three shipped algebras plus the
/// four ordered products of E1 and E2. Returns the file list.
fn write_curated(dir: &Path) -> Vec<PathBuf> {
    let mut files = Vec::new();
    for name in ["e1.json", "e2.json", "m2_f2.json"] {
        let dst = dir.join(name);
        fs::copy(data_dir().join(name), &dst).unwrap();
        files.push(dst);
    }
    let e1 = load_algebra("e1.json");
    let e2 = load_algebra("e2.json");
    for (name, left, right) in [
        ("prod_e1_e1.json", &e1, &e1),
        ("prod_e1_e2.json", &e1, &e2),
        ("prod_e2_e1.json", &e2, &e1),
        ("prod_e2_e2.json", &e2, &e2),
    ] {
        let prod = direct_product(left, right).unwrap();
        let dst = dir.join(name);
        fs::write(&dst, format::algebra_to_json(&prod.algebra)).unwrap();
        files.push(dst);
    }
    files
}

fn check<'r>(report: &'r VerifyReport, name: &str) -> &'r CheckOutcome {
    let c = report
        .checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("report carries no check named {name}"));
    assert!(c.cases > 0, "{name} ran zero cases");
    assert!(
        c.ok(),
        "{name}: {}/{} cases passed, first counterexample: {:?}",
        c.passed,
        c.cases,
        c.first_counterexample
    );
    c
}

fn criterion_1(report: &VerifyReport) -> String {
    assert_eq!(report.corpus_size, 36, "corpus drifted");
    assert!(report.ok, "verification reported failures");
    let c = check(report, "centrality-three-way-agreement");
    assert!(
        report.wall_seconds < 300.0,
        "run took {:.1}s, over the five-minute bound",
        report.wall_seconds
    );
    format!(
        "classic = algebraic = categorical on {} surjections ({:.1}s, corpus {})",
        c.cases, report.wall_seconds, report.corpus_size
    )
}

fn criterion_2(report: &VerifyReport) -> String {
    let c = check(report, "action-extension-round-trip");
    format!(
        "extract/semidirect round trips on {} cases, identity and scrambled presentations",
        c.cases
    )
}

fn criterion_3(report: &VerifyReport) -> String {
    let a = check(report, "lemma31-unanimity");
    let b = check(report, "thm33-unanimity");
    format!(
        "seven flags unanimous on {} cases, five flags on {}",
        a.cases, b.cases
    )
}

fn criterion_4() -> String {
    let f2 = Field::prime(2).unwrap();
    let e2 = load_algebra("e2.json");
    let t = Table::of(&e2);
    let ideal = common::commutator_ideal_elements(&t);
    let span_t: BTreeSet<Vec<u64>> = [vec![0, 0], vec![0, 1]].into_iter().collect();
    assert_eq!(ideal, span_t, "oracle commutator ideal of E2");
    assert_eq!(e2.commutator_ideal().dim(), 1);
    let refl = e2.comm_reflection();
    assert_eq!(refl.quotient.dim(), 1);
    assert_eq!(*refl.quotient.structure_constant(0, 0, 0), f2.one());

    let m2 = load_algebra("m2_f2.json");
    assert_eq!(common::commutator_ideal_elements(&Table::of(&m2)).len(), 16);
    assert_eq!(m2.commutator_ideal().dim(), 4);

    let idem = load_algebra("idem_f2.json");
    let z1 = Algebra::zero_mult(f2, 1);
    let z2 = Algebra::zero_mult(f2, 2);
    for (x, dim) in [(&z1, 2usize), (&idem, 1), (&z2, 8)] {
        assert_eq!(common::weak_actor_pair_count(&Table::of(x)), 1 << dim);
        assert_eq!(weak_actor(x).unwrap().algebra.dim(), dim);
    }

    for (b, x, n) in [(&z1, &z1, 1usize), (&idem, &z1, 4)] {
        assert_eq!(common::action_count_by_semidirect(&Table::of(b), &Table::of(x)), n);
        assert_eq!(enumerate_actions(b, x, 1_000_000).unwrap().len(), n);
    }
    "commutator ideals, Comm(E2), weak actor dims 2/1/8, action counts 1/4".to_string()
}

fn criterion_5(report: &VerifyReport) -> String {
    let contain = check(report, "acting-morphisms-land-in-weak-actor");
    check(report, "acting-morphisms-distinct");
    let compl = check(report, "completion-iff-compatible");
    let acc = check(report, "accessibility");
    format!(
        "weak-actor containment on {} actions, completion on {} triples, accessify on {}",
        contain.cases, compl.cases, acc.cases
    )
}

fn criterion_6(report: &VerifyReport) -> String {
    check(report, "annihilator-implies-classic");
    let stab = check(report, "pullback-stability");
    assert!(
        report.classic_without_annihilator >= 1,
        "no witness separating classic from annihilator centrality"
    );
    let Parsed::Hom(alpha) = format::parse_file(&data_dir().join("alpha_e1.json")).unwrap()
    else {
        panic!("alpha_e1.json holds no hom");
    };
    let rep = centrality_agreement(&alpha).unwrap();
    assert!(rep.classic && !rep.annihilator, "E1 witness drifted");
    format!(
        "implication holds, {} separating witnesses, stability on {} squares",
        report.classic_without_annihilator, stab.cases
    )
}

fn criterion_7(first: &VerifyReport, spec: &CorpusSpec) -> String {
    let mut again = spec.clone();
    again.jobs = Some(2);
    let second = algext::verify_corpus(&again).unwrap();
    assert_eq!(
        first.to_json(),
        second.to_json(),
        "reports differ between runs"
    );
    format!("two runs, byte-identical reports ({} bytes)", first.to_json().len())
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let curated = write_curated(dir.path());
    let mut spec = CorpusSpec::new(2, 2);
    spec.curated = curated;
    spec.budget = 1_000_000;
    let started = Instant::now();
    let report = match algext::verify_corpus(&spec) {
        Ok(r) => r,
        Err(e) => {
            println!("criterion 1 .. 7: FAIL (verify_corpus errored: {e})");
            std::process::exit(1);
        }
    };
    eprintln!(
        "corpus of {} algebras verified in {:.1}s",
        report.corpus_size,
        started.elapsed().as_secs_f64()
    );

    let criteria: Vec<(&str, Box<dyn Fn() -> String>)> = vec![
        ("three-way centrality agreement", Box::new(|| criterion_1(&report))),
        ("action/extension span equivalence", Box::new(|| criterion_2(&report))),
        ("flag battery unanimity", Box::new(|| criterion_3(&report))),
        ("golden values against brute-force oracles", Box::new(criterion_4)),
        ("actor properties and accessibility", Box::new(|| criterion_5(&report))),
        ("centrality implications and pullback stability", Box::new(|| criterion_6(&report))),
        ("deterministic reports", Box::new(|| criterion_7(&report, &spec))),
    ];

    // The FAIL line carries the panic message; the default hook would only
    // repeat it with a backtrace banner.
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(run)) {
            Ok(detail) => println!("criterion {}: PASS  {title}: {detail}", i + 1),
            Err(payload) => {
                failed += 1;
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".to_string());
                println!("criterion {}: FAIL  {title}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("acceptance: {failed} of 7 criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: 7/7 criteria hold");
}
