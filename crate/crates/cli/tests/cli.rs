use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn supermac(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supermac")).args(args).env("SUPERMAC_CACHE", cache).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn strip_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings");
    v
}

#[test]
fn compute_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let first = supermac(dir.path(), &["compute", "1", "1", "new"]);
    assert_eq!(first.status.code(), Some(0));
    let path = dir.path().join("1_1/new/family.json");
    let bytes = std::fs::read(&path).unwrap();
    let second = supermac(dir.path(), &["compute", "1", "1", "new"]);
    assert!(stdout(&second).contains("(cached)"), "{}", stdout(&second));
    assert_eq!(std::fs::read(&path).unwrap(), bytes);

    let rec: Value = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(rec["format_version"], 1);
    assert_eq!(rec["polys"]["1;"]["coeffs"]["0;1"]["num"], serde_json::json!([["-1", 1, 1], ["1", 1, 0]]));

    let forced = supermac(dir.path(), &["compute", "1", "1", "new", "--force"]);
    assert!(!stdout(&forced).contains("(cached)"));
    assert_eq!(std::fs::read(&path).unwrap(), bytes);
}

#[test]
fn compute_counts_degree_four_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = supermac(dir.path(), &["compute", "4", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: Value = serde_json::from_slice(&std::fs::read(dir.path().join("4_1/new/family.json")).unwrap()).unwrap();
    assert_eq!(rec["polys"].as_object().unwrap().len(), 12);
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(supermac(dir.path(), &["compute", "2", "1", "invalid-kind"]).status.code(), Some(2));
    assert_eq!(supermac(dir.path(), &["show", "bogus"]).status.code(), Some(2));
    assert_eq!(supermac(dir.path(), &["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(supermac(dir.path(), &["compute", "1", "3"]).status.code(), Some(2));
}

#[test]
fn show_renders_polynomials() {
    let dir = tempfile::tempdir().unwrap();
    let p = supermac(dir.path(), &["show", "1;", "new", "--what", "P"]);
    assert_eq!(stdout(&p), "m[1;] + (q - q*t)/(1 - q*t) m[0;1]\n");
    let j = supermac(dir.path(), &["show", "0;1", "new", "--what", "J"]);
    assert_eq!(stdout(&j), "(1 - t) m[0;1]\n");
    let tex = supermac(dir.path(), &["show", "1;", "--format", "latex"]);
    assert_eq!(stdout(&tex), "m_{(1;\\,)} + \\frac{q-qt}{1-qt}\\,m_{(0;1)}\n");
    let json = supermac(dir.path(), &["show", "1;", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["basis"], "monomial");
}

#[test]
fn kostka_latex_layout() {
    let dir = tempfile::tempdir().unwrap();
    let o = supermac(dir.path(), &["kostka", "1", "1", "--format", "latex"]);
    let s = stdout(&o);
    assert!(s.contains("$(1;\\,)$ & $1$ & $q$ \\\\ \\hline"), "{s}");
    assert!(s.contains("$(0;1)$ & $t$ & $1$ \\\\ \\hline"), "{s}");
    assert!(dir.path().join("kostka/1_1/qt.json").exists());
}

#[test]
fn counterexample_and_tau_fix_pass() {
    let dir = tempfile::tempdir().unwrap();
    for suite in ["counterexample", "tau-fix", "kernel"] {
        let o = supermac(dir.path(), &["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
}

#[test]
fn table1_reports_counts() {
    let dir = tempfile::tempdir().unwrap();
    let o = supermac(dir.path(), &["verify", "table1", "--max-total", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let details: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["detail"].as_str().unwrap()).collect();
    assert_eq!(
        details,
        [
            "equations 66, unknowns 64, consistent true",
            "equations 136, unknowns 128, consistent true",
            "equations 171, unknowns 163, consistent true"
        ]
    );
    let on_disk: Value = serde_json::from_slice(&std::fs::read(dir.path().join("reports/table1.json")).unwrap()).unwrap();
    assert_eq!(on_disk, v);
    assert!(dir.path().join("reports/table1.txt").exists());
}

#[test]
fn warm_and_cold_cache_agree() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "all", "--max-total", "4", "--format", "json", "--jobs", "2"];
    let cold = supermac(dir.path(), &args);
    assert_eq!(cold.status.code(), Some(0), "{}", stdout(&cold));
    let warm = supermac(dir.path(), &args);
    let a: Value = serde_json::from_str(&stdout(&cold)).unwrap();
    let b: Value = serde_json::from_str(&stdout(&warm)).unwrap();
    assert_eq!(strip_timings(a), strip_timings(b));
}

#[test]
fn corrupted_cache_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(supermac(dir.path(), &["compute", "1", "1"]).status.code(), Some(0));
    let path = dir.path().join("1_1/new/family.json");
    let mut rec: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    rec["polys"]["1;"]["coeffs"]["0;1"] = serde_json::json!({"num": [["7", 0, 0]], "den": [["1", 0, 0]]});
    std::fs::write(&path, serde_json::to_vec(&rec).unwrap()).unwrap();

    let o = supermac(dir.path(), &["verify", "table2", "--max-total", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "fail");
    let w = &v["checks"][0]["witnesses"][0];
    assert_eq!(w["labels"], serde_json::json!(["1;", "0;1"]));
    assert!(w["residual"].as_str().unwrap().contains('7'), "{w}");
}

#[test]
fn clean_removes_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c");
    supermac(&cache, &["compute", "2", "1"]);
    supermac(&cache, &["compute", "1", "1"]);
    assert_eq!(supermac(&cache, &["clean", "2", "1"]).status.code(), Some(0));
    assert!(!cache.join("2_1").exists() && cache.join("1_1").exists());
    assert_eq!(supermac(&cache, &["clean"]).status.code(), Some(0));
    assert!(!cache.exists());
}
