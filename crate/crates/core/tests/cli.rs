use std::process::{Command, Output};

fn shicone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shicone"))
        .args(args)
        .env_remove("SHICONE_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn info_reports_invariants() {
    let o = shicone(&["info", "A2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("catalan: 5") && s.contains("group order: 6"), "{s}");
    assert!(stdout(&shicone(&["info", "G2"])).contains("catalan: 8"));
    assert!(stdout(&shicone(&["info", "A1"])).contains("positive roots: 1"));
}

#[test]
fn info_json_is_parseable() {
    let o = shicone(&["info", "F4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["catalan"], "105");
    assert_eq!(v["coxeter_number"], 12);
}

#[test]
fn counts_and_matrices() {
    let s = stdout(&shicone(&["count", "A5", "--word", "5 2 4 3 1"]));
    assert!(s.ends_with("count: 38\n"), "{s}");
    let s = stdout(&shicone(&["count", "B4", "--word", "2,3,4,1", "--show-matrix"]));
    assert!(s.contains("[20   1   1   2  70]") && s.contains("count: 29"), "{s}");
    assert!(stdout(&shicone(&["count", "A2", "--word", ""])).contains("count: 5"));
    let s = stdout(&shicone(&["count", "A2", "--word", "1 2", "--order", "2 1", "--show-matrix"]));
    assert!(s.contains("[1  0  1]\n  [0  1  2]\n  [1  1  5]"), "{s}");
}

#[test]
fn count_with_oracle_passes() {
    let o = shicone(&["count", "D4", "--word", "2 1 3 4 2", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(": PASS"));
}

#[test]
fn poincare_output() {
    assert!(stdout(&shicone(&["poincare", "A2", "--word", "1 2"])).contains("poincare: 1 + t\n"));
    assert!(stdout(&shicone(&["poincare", "A2"])).contains("poincare: 1 + 3t + t^2\n"));
    assert!(stdout(&shicone(&["poincare", "A1", "--word", "1"])).contains("poincare: 1\n"));
}

#[test]
fn tables() {
    let s = stdout(&shicone(&["table", "A1"]));
    assert_eq!(s, "word,length,count\ne,0,2\n1,1,1\nΣ,,3\n");
    let s = stdout(&shicone(&["table", "A2"]));
    assert_eq!(s.lines().count(), 8);
    assert!(s.ends_with("Σ,,16\n"));
    let s = stdout(&shicone(&["table", "G2", "--workers", "2", "--poincare"]));
    assert!(s.starts_with("word,length,count,poincare_coeffs\ne,0,8,1 6 1\n"), "{s}");
    assert!(s.ends_with("Σ,,49,\n"));
}

#[test]
fn tables_are_deterministic() {
    let a = shicone(&["table", "B3", "--workers", "1"]);
    let b = shicone(&["table", "B3", "--workers", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a3.csv");
    let o = shicone(&["table", "A3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.ends_with("Σ,,125\n"));
}

#[test]
fn verification() {
    let o = shicone(&["verify", "B3", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS (48 elements)"));
    let o = shicone(&["verify", "A2", "--word", "1 2"]);
    assert!(stdout(&o).contains("determinant 2, antichains 2, avoiding paths 2"));
    let o = shicone(&["verify", "E6", "--oracle-only", "--word", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("antichains 833"));
}

#[test]
fn digraph_export() {
    let dot = stdout(&shicone(&["digraph", "A2", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 8);
    let o = shicone(&["digraph", "G2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["type"], "G2");
}

#[test]
fn e6_runs_from_a_data_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a3.json");
    // Any valid digraph file is accepted for E6 only if its corners name E6 roots, so a
    // type-A file must be rejected as bad data.
    let o = shicone(&["digraph", "A3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = shicone(&["count", "E6", "--data", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| shicone(args).status.code();
    assert_eq!(code(&["info", "Q7"]), Some(2));
    assert_eq!(code(&["count", "A2", "--word", "3"]), Some(2));
    assert_eq!(code(&["count", "A2", "--word", "1 2", "--order", "1 1"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["verify", "A2"]), Some(2));
    assert_eq!(code(&["digraph", "E6"]), Some(3));
    assert_eq!(code(&["count", "E7"]), Some(3));
    assert_eq!(code(&["count", "E6", "--data", "/nonexistent/e6.json"]), Some(6));
    assert_eq!(code(&["table", "B4", "--max-group-order", "100"]), Some(5));
    assert_eq!(code(&["digraph", "A2", "--out", "/nonexistent/dir/a2.dot"]), Some(6));
    let o = shicone(&["digraph", "E6"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--oracle-only"));
}
