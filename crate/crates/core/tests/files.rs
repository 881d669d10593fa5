//! The shipped data files are canonical: every one parses, and serializing
//! the parse result reproduces the file byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use algext::central::centrality_agreement;
use algext::extension::{extract_action, semidirect};
use algext::format::{self, Parsed};

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn parse(name: &str) -> Parsed {
    format::parse_file(&data_dir().join(name)).unwrap()
}

#[test]
fn every_data_file_is_a_canonical_fixed_point() {
    let mut names: Vec<_> = fs::read_dir(data_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    names.sort();
    assert!(names.len() >= 10, "data corpus went missing");
    for path in names {
        let parsed = format::parse_file(&path).unwrap();
        let rendered = format::parsed_to_json(&parsed);
        let on_disk = fs::read_to_string(&path).unwrap();
        assert_eq!(rendered, on_disk, "non-canonical file {}", path.display());
    }
}

#[test]
fn shipped_kinds_are_as_labelled() {
    for (name, kind) in [
        ("e1.json", "algebra"),
        ("e2.json", "algebra"),
        ("m2_f2.json", "algebra"),
        ("zero1_f2.json", "algebra"),
        ("zero2_f2.json", "algebra"),
        ("idem_f2.json", "algebra"),
        ("e1_q.json", "algebra"),
        ("alpha_e1.json", "hom"),
        ("action_e1.json", "action"),
        ("ext_e1.json", "extension"),
    ] {
        assert_eq!(parse(name).kind(), kind, "{name}");
    }
}

#[test]
fn alpha_e1_separates_classic_from_annihilator_centrality() {
    let Parsed::Hom(alpha) = parse("alpha_e1.json") else {
        panic!("expected a hom");
    };
    let report = centrality_agreement(&alpha).unwrap();
    assert!(report.classic);
    assert!(report.algebraic);
    assert!(report.categorical);
    assert!(!report.annihilator);
}

#[test]
fn shipped_extension_is_the_semidirect_of_the_shipped_action() {
    let Parsed::Action(act) = parse("action_e1.json") else {
        panic!("expected an action");
    };
    let Parsed::Extension(ext) = parse("ext_e1.json") else {
        panic!("expected an extension");
    };
    let built = semidirect(&act);
    assert_eq!(
        format::extension_to_json(&built),
        fs::read_to_string(data_dir().join("ext_e1.json")).unwrap()
    );
    let back = extract_action(&ext);
    assert_eq!(
        format::action_to_json(&back),
        fs::read_to_string(data_dir().join("action_e1.json")).unwrap()
    );
}

#[test]
fn rational_twin_matches_the_prime_table() {
    let Parsed::Algebra(a) = parse("e1.json") else {
        panic!()
    };
    let Parsed::Algebra(q) = parse("e1_q.json") else {
        panic!()
    };
    assert_eq!(a.dim(), q.dim());
    assert_eq!(a.basis_names(), q.basis_names());
    assert!(q.is_commutative() && a.is_commutative());
}
