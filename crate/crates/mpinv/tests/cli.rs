use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn mpinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, v.to_string()).unwrap();
    path
}

fn matrix(ring: &str, rows: &[&[&str]]) -> Value {
    json!({"ring": ring, "n": rows.len(), "matrix": rows})
}

fn canonical_pair() -> Value {
    json!({
        "p": matrix("QQ", &[&["1", "0"], &["0", "0"]]),
        "q": matrix("QQ", &[&["1/2", "1/2"], &["1/2", "1/2"]]),
    })
}

#[test]
fn mp_identity() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", &matrix("QQ", &[&["1", "0"], &["0", "1"]]));
    let o = mpinv(&["mp", "--input", f.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["inverse"]["matrix"], json!([["1", "0"], ["0", "1"]]));
    assert_eq!(v["penrose"]["overall"], json!(true));
}

#[test]
fn mp_integer_two_has_no_inverse() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "two.json", &matrix("ZZ", &[&["2"]]));
    let o = mpinv(&["mp", "--input", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no MP-inverse"));
}

#[test]
fn mp_rank_one_rational() {
    // [[1,1],[1,1]]† = [[1/4,1/4],[1/4,1/4]]: with a = 2·P for the projector
    // P = [[1/2,1/2],[1/2,1/2]], a† = P/2.
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "ones.json",
        &matrix("QQ", &[&["1", "1"], &["1", "1"]]),
    );
    let o = mpinv(&["mp", "--input", f.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["inverse"]["matrix"],
        json!([["1/4", "1/4"], ["1/4", "1/4"]])
    );
}

#[test]
fn mp_output_round_trips_as_input() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "a.json",
        &matrix("QI", &[&["1/2+i", "3"], &["-i", "0"]]),
    );
    let o = mpinv(&["mp", "--input", f.to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let g = write(&dir, "inv.json", &v["inverse"]);
    let o2 = mpinv(&["mp", "--input", g.to_str().unwrap(), "--format", "json"]);
    let v2: Value = serde_json::from_str(&stdout(&o2)).unwrap();
    // (a†)† = a, entry strings identical to the input
    assert_eq!(
        v2["inverse"]["matrix"],
        json!([["1/2+i", "3"], ["-i", "0"]])
    );
}

#[test]
fn mp_input_errors() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(
        mpinv(&["mp", "--input", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let f = write(&dir, "r.json", &matrix("RR", &[&["1"]]));
    assert_eq!(
        mpinv(&["mp", "--input", f.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let f = write(&dir, "q.json", &matrix("QQ", &[&["1"]]));
    let o = mpinv(&["mp", "--input", f.to_str().unwrap(), "--ring", "ZZ"]);
    assert_eq!(o.status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(
        mpinv(&["mp", "--input", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn check_fgh_canonical_pair() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pair.json", &canonical_pair());
    let o = mpinv(&[
        "check",
        "--statement",
        "thm-fgh",
        "--input",
        f.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let values = &v[0]["values"];
    assert_eq!(values[0]["name"], "F");
    assert_eq!(
        values[0]["value"]["matrix"],
        json!([["1", "-1"], ["0", "0"]])
    );
    assert_eq!(
        values[1]["value"]["matrix"],
        json!([["1", "0"], ["-1", "0"]])
    );
    assert_eq!(
        values[2]["value"]["matrix"],
        json!([["1", "0"], ["0", "1"]])
    );
}

#[test]
fn check_commuting_sum_is_skipped() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pair.json", &canonical_pair());
    let o = mpinv(&[
        "check",
        "--statement",
        "thm-commuting-sum",
        "--input",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("pq = qp"));
}

#[test]
fn check_recompose_equal_pair() {
    let dir = TempDir::new().unwrap();
    let p = matrix("QQ", &[&["1", "0"], &["0", "0"]]);
    let f = write(&dir, "pair.json", &json!({"p": p, "q": p}));
    let o = mpinv(&[
        "check",
        "--statement",
        "cor-fgh-recompose",
        "--input",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(p-q)† = [[0, 0], [0, 0]]"));
}

#[test]
fn check_explicit_operands() {
    let dir = TempDir::new().unwrap();
    let mut pair = canonical_pair();
    pair["a"] = matrix("QQ", &[&["1", "0"], &["0", "0"]]);
    pair["b"] = matrix("QQ", &[&["0", "0"], &["0", "3"]]);
    let f = write(&dir, "pair.json", &pair);
    let o = mpinv(&[
        "check",
        "--statement",
        "lemma-orthogonal-sum",
        "--input",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[[1, 0], [0, 1/3]]"));
}

#[test]
fn check_all_reports_worst_status() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pair.json", &canonical_pair());
    let o = mpinv(&[
        "check",
        "--statement",
        "all",
        "--input",
        f.to_str().unwrap(),
        "--format",
        "json",
    ]);
    // only thm-commuting-sum is skipped
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let skipped: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["status"] != "verified")
        .map(|o| o["statement"].as_str().unwrap())
        .collect();
    assert_eq!(skipped, ["thm-commuting-sum"]);
}

#[test]
fn check_unknown_statement() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pair.json", &canonical_pair());
    let o = mpinv(&[
        "check",
        "--statement",
        "thm-nope",
        "--input",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fuzz_zero_trials() {
    let o = mpinv(&["fuzz", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failures"));
}

#[test]
fn fuzz_corruption_fails_with_witness() {
    let o = mpinv(&[
        "fuzz",
        "--seed",
        "5",
        "--trials",
        "20",
        "--dim",
        "2",
        "--corrupt",
        "thm-five-formulas",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(out.contains("FAIL trial"));
    assert!(out.contains("p = [["));
}

#[test]
fn fuzz_rejects_bad_config() {
    assert_eq!(mpinv(&["fuzz", "--ring", "Zm:3"]).status.code(), Some(2));
    assert_eq!(mpinv(&["fuzz", "--dim", "0"]).status.code(), Some(2));
    assert_eq!(
        mpinv(&["fuzz", "--statement", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(mpinv(&["fuzz", "--trials", "many"]).status.code(), Some(2));
}

#[test]
fn oracle_small_rings() {
    let o = mpinv(&["oracle", "--ring", "Zm:2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["statements"]["thm-sum-via-diff"]["verified"], 0);

    let o = mpinv(&["oracle", "--ring", "Zm:3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["statements"]["thm-sum-via-diff"]["verified"], 36);
}

#[test]
fn oracle_budget_and_ring_errors() {
    assert_eq!(
        mpinv(&["oracle", "--ring", "Zm:2", "--dim", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(mpinv(&["oracle", "--ring", "QQ"]).status.code(), Some(2));
}

#[test]
fn demo_json() {
    let o = mpinv(&["demo", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["integer_diff_dagger"], "0");
    assert_eq!(v["integer_sum_exists"], false);
    assert_eq!(v["rational_sum_dagger"], "1/2");
}
