//! End-to-end runs of the binary: exit codes, reports and goldens.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(id: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(format!("{id}.alg"))
        .display()
        .to_string()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_decompgen")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn trivial_at_a_good_prime() {
    let o = run(&["trivial", &fixture("S3"), "--prime", "p=5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status: Trivial"));
}

#[test]
fn non_trivial_is_a_negative_answer() {
    let o = run(&["trivial", &fixture("C2"), "--prime", "p=2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("status: NonTrivial"));
    let o = run(&["split-check", "corpus:C3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn decomposition_matrix_of_c2_at_2() {
    let o = run(&["decmat", &fixture("C2"), "--prime", "p=2", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["entries"], serde_json::json!([[1], [1]]));
    assert_eq!(v["trivial"], serde_json::json!(false));
}

#[test]
fn stratify_c2_has_two_strata() {
    let o = run(&["stratify", &fixture("C2"), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let strata: Vec<&str> = v["strata"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["description"].as_str().unwrap())
        .collect();
    assert_eq!(strata, ["Spec Z \\ (V(2))", "V(2)"]);
}

#[test]
fn prime_parsing() {
    let o = run(&["fiber", &fixture("S3"), "--prime", "p=3"]);
    assert!(stdout(&o).contains("prime: (3)"));
    let o = run(&["fiber", &fixture("B2_Qdelta"), "--prime", "gen=[delta]"]);
    assert!(stdout(&o).contains("prime: (delta)"));
    let o = run(&["fiber", &fixture("S3"), "--prime", "gen=[4]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a prime"));
}

#[test]
fn error_classes_map_to_exit_codes() {
    let bad = std::env::temp_dir().join("decompgen-bad.alg");
    std::fs::write(&bad, "algebra X\n").unwrap();
    assert_eq!(run(&["validate", bad.to_str().unwrap()]).status.code(), Some(2));
    let o = run(&["trivial", &fixture("TL4"), "--prime", "gen=[delta^2-2]"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn reports_match_goldens() {
    let cases: [(&str, Vec<String>); 4] = [
        ("decmat_S3_p3.json", vec!["decmat".into(), fixture("S3"), "--prime".into(), "p=3".into(), "--format".into(), "structured".into()]),
        ("stratify_B2_Zdelta.txt", vec!["stratify".into(), fixture("B2_Zdelta")]),
        ("discriminant_TL3.json", vec!["discriminant".into(), fixture("TL3"), "--format".into(), "structured".into()]),
        ("simples_S3_p2.txt", vec!["simples".into(), fixture("S3"), "--prime".into(), "p=2".into()]),
    ];
    for (name, args) in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = stdout(&run(&args));
        assert_eq!(first, golden(name), "{name}");
        assert_eq!(stdout(&run(&args)), first, "{name} differs between runs");
    }
}

#[test]
fn corpus_build_matches_fixtures() {
    let dir = std::env::temp_dir().join(format!("decompgen-corpus-{}", std::process::id()));
    assert_eq!(run(&["corpus-build", dir.to_str().unwrap()]).status.code(), Some(0));
    for id in ["C2", "S3", "B2_Zdelta", "TL4"] {
        let built = std::fs::read_to_string(dir.join(format!("{id}.alg"))).unwrap();
        assert_eq!(built, std::fs::read_to_string(fixture(id)).unwrap());
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify-all", "--samples", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}
