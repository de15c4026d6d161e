use std::path::PathBuf;

use super::execute;

fn run(args: &[&str]) -> super::Output {
    let mut all = vec!["ncdiff"];
    all.extend_from_slice(args);
    execute(all)
}

fn write_tmp(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Set NCDIFF_BLESS=1 to rewrite the golden files.
fn assert_golden(name: &str, got: &str) {
    let p = golden(name);
    if std::env::var_os("NCDIFF_BLESS").is_some() {
        std::fs::write(&p, got).unwrap();
    }
    let want = std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    assert_eq!(got, want, "golden mismatch for {name}");
}

const DUAL: &str = r#"{
  "name": "dual numbers",
  "dim": 2,
  "basis": ["1", "x"],
  "unit": 0,
  "mult": [
    [0, 0, [[0, "1"]]],
    [0, 1, [[1, "1"]]],
    [1, 0, [[1, "1"]]],
    [1, 1, []]
  ]
}
"#;

#[test]
fn validate_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_tmp(&dir, "dual.json", DUAL);
    let out = run(&["validate", &path]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("note: dim A = 2"));
    assert!(out.stdout.contains("note: dim Z(A) = 2"));
}

#[test]
fn validate_rejects_bad_tables() {
    let dir = tempfile::tempdir().unwrap();
    // 1·x = 0 breaks unitality
    let bad = DUAL.replace(r#"[0, 1, [[1, "1"]]]"#, r#"[0, 1, []]"#);
    let path = write_tmp(&dir, "bad.json", &bad);
    let out = run(&["validate", &path]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    assert!(out.stdout.contains("[FAIL]"));

    let junk = DUAL.replace(r#"[[0, "1"]]]"#, r#"[[0, "1/0"]]]"#);
    let path = write_tmp(&dir, "junk.json", &junk);
    let out = run(&["validate", &path]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line"), "{}", out.stderr);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["hochschild", "no-such-algebra"]).code, 2);
    assert_eq!(run(&["verify", "D", "--t-cap", "9"]).code, 2);
    assert_eq!(run(&["hochschild", "D", "--max-degree", "40"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn hochschild_dual_numbers() {
    let out = run(&["hochschild", "D", "--max-degree", "2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("expected 2, 2, 2, got 2, 2, 2"));
    assert!(out.stdout.contains("expected 1, 1, 1, got 1, 1, 1"));
    assert_golden("hochschild_D.txt", &out.stdout);
}

#[test]
fn zero_degree_is_vacuous() {
    let out = run(&["hochschild", "k", "--max-degree", "0"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("1 checks, 0 failed"));
}

#[test]
fn cyclic_methods() {
    let out = run(&["cyclic", "D", "--max-degree", "3", "--method", "bB"]);
    assert_eq!(out.code, 0);
    assert_golden("cyclic_D_bB.txt", &out.stdout);
    // dtiota picks up the extra de Rham classes on M2
    assert_eq!(run(&["cyclic", "M2", "--max-degree", "2"]).code, 1);
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "D", "--suite", "all", "--max-degree", "4", "--t-cap", "3"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let out = run(&["verify", "k[x]/(x^3)", "--suite", "harmonic", "--split", "kappa2"]);
    assert_eq!(out.code, 1);
}

#[test]
fn repcheck_json() {
    let out = run(&["--json", "repcheck", "--gens", "2", "--dim", "2", "--max-word-len", "3"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["checks"].as_array().is_some_and(|c| !c.is_empty()));
    assert_golden("repcheck.json", &out.stdout);
}

#[test]
fn deterministic_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let args = ["verify", "D", "--suite", "deform", "--seed", "7", "--out", path.to_str().unwrap()];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a.stdout);
    assert!(a.stdout.starts_with("seed 7\n"));
}
