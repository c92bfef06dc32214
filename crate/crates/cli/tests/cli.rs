use std::process::{Command, Output};

use stw_core::algebra::AlgebraJson;
use stw_core::catalog::catalog_by_name;

fn stw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stw")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn dihedral_json() -> AlgebraJson {
    AlgebraJson::from_algebra(&catalog_by_name("dihedral:q=2:p=2").unwrap().algebra)
}

#[test]
fn validate_accepts_dihedral() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d2.json");
    std::fs::write(&path, dihedral_json().to_json_string()).unwrap();
    let o = stw(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("local symmetric, d=8"));
}

#[test]
fn validate_reports_associativity_witness() {
    let mut json = dihedral_json();
    // Redirect the product x*y to yx.
    let yx = json.basis.iter().position(|b| b == "yx").unwrap();
    for entry in &mut json.table {
        if entry.0 == 1 && entry.1 == 2 {
            entry.2 = vec![(yx, 1)];
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, json.to_json_string()).unwrap();
    let o = stw(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not associative: (b"), "{}", stderr(&o));
}

#[test]
fn validate_missing_file_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = stw(&["validate", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_garbage_is_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{\"p\": 2,").unwrap();
    assert_eq!(stw(&["validate", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn export_round_trips_through_validate() {
    let o = stw(&["export", "klein:p=3"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let v = stw(&["validate", path.to_str().unwrap()]);
    assert!(stdout(&v).contains("local symmetric, d=4"));
}

#[test]
fn dihedral_twist_is_not_a_shift() {
    let o = stw(&[
        "twist", "--alg", "dihedral:q=2:p=2", "--kind", "spherical", "--x", "x", "--module", "simple", "--iter",
        "2", "--compare", "omega:-2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("twisted dim: 9"));
    assert!(out.contains("not stably isomorphic"), "{out}");
}

#[test]
fn semidihedral_twist_is_a_shift() {
    let o = stw(&[
        "twist",
        "--alg",
        "semidihedral:q=2:p=2:delta=1",
        "--kind",
        "spherical",
        "--x",
        "x",
        "--module",
        "simple",
        "--iter",
        "2",
        "--compare",
        "omega:-4",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("compare omega^-4: stably isomorphic"), "{out}");
}

#[test]
fn pn_twist_on_dihedral_fails_commutation() {
    let o = stw(&["twist", "--alg", "dihedral:q=2:p=2", "--kind", "pn", "--x", "x", "--y", "y", "--module", "simple"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("does not commute"), "{}", stderr(&o));
}

#[test]
fn klein_pn_twist_of_simple() {
    let o = stw(&["twist", "--alg", "klein:p=2", "--kind", "pn", "--x", "x", "--y", "y", "--module", "simple"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("twisted dim: 5"));
}

#[test]
fn twist_rejects_bad_compare() {
    let o = stw(&["twist", "--alg", "klein:p=2", "--kind", "spherical", "--x", "x", "--compare", "sigma:1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_algebra_is_usage_error() {
    let o = stw(&["twist", "--alg", "quaternion:q=2", "--kind", "spherical", "--x", "x"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    assert_eq!(stw(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn suite_report_is_stable_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let ra = stw(&["suite", "--level", "quick", "--jobs", "1", "--no-timing", "--json", a.to_str().unwrap()]);
    let rb = stw(&["suite", "--level", "quick", "--jobs", "4", "--no-timing", "--json", b.to_str().unwrap()]);
    assert_eq!(ra.status.code(), Some(0), "{}", stdout(&ra));
    assert_eq!(rb.status.code(), Some(0));
    let ta = std::fs::read_to_string(&a).unwrap();
    assert_eq!(ta, std::fs::read_to_string(&b).unwrap());
    let v: serde_json::Value = serde_json::from_str(&ta).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["failed"], 0);
    assert!(stdout(&ra).contains("0 failed"));
}

#[test]
fn missing_symmetric_form_is_a_warning_unless_required() {
    // k[x,y]/(x,y)^2 is local with a two-dimensional socle.
    let json = r#"{"p": 3, "dim": 3, "basis": ["1", "x", "y"], "unit": 0, "generators": [1, 2],
        "table": [[0, 0, [[0, 1]]], [0, 1, [[1, 1]]], [0, 2, [[2, 1]]], [1, 0, [[1, 1]]], [2, 0, [[2, 1]]]]}"#;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square_zero.json");
    std::fs::write(&path, json).unwrap();
    let o = stw(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("warning"));
    let o = stw(&["validate", "--require-symmetric", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
