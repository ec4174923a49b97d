use std::process::Command;

fn djones(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_djones")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn jones_of_the_figure_eight() {
    let (code, out) = djones(&["jones", "--knot", "4_1", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n=2 q^-2-q^-1+1-q+q^2\n");
    let (_, json) = djones(&["jones", "--knot", "4_1", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let p = djones::formats::laurent_from_json(&v[0]["value"]).unwrap();
    assert_eq!(p.to_string(), "q^-2-q^-1+1-q+q^2");
}

#[test]
fn conjecture_two_at_order_three() {
    let (code, out) = djones(&["conjecture2", "--knot", "4_1", "--N", "3", "--color", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "CONJECTURE-PASS 4_1 N=3 n=2 13*1 13*1\n");
}

#[test]
fn recursion_grid_for_five_two() {
    let (code, out) = djones(&["recursion-check", "--knot", "5_2", "--m", "0..5", "--n", "1..6"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 36);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn exit_codes() {
    assert_eq!(djones(&["jones", "--knot", "6_1", "--n", "2"]).0, 2);
    assert_eq!(djones(&["jones", "--knot", "4_1", "--n", "0"]).0, 2);
    assert_eq!(djones(&["frobnicate"]).0, 2);
    assert_eq!(djones(&["statesum", "--knot", "4_1", "--diagram", "/nonexistent.json", "--N", "2", "--color", "1"]).0, 2);
    // Trefoil data checked against the figure-eight diagram fails.
    let (code, out) = djones(&["conjecture2", "--knot", "3_1", "--diagram", "builtin:4_1", "--N", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("CONJECTURE-FAIL"));
}

#[test]
fn level_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_djones"))
        .args(["descendant", "--knot", "3_1", "--m", "1", "--mode", "habiro"])
        .env("DJONES_LEVEL", "2")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "m=1 [2-2*q+q^2]_2\n");
}

#[test]
fn statesum_dump_and_oracle() {
    let dir = std::env::temp_dir().join(format!("djones-dump-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let (code, out) = djones(&[
        "statesum", "--knot", "4_1", "--N", "2", "--color", "1", "--naive", "--dump", path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("scalar 5"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let m = djones::formats::matrix_from_json(&v).unwrap();
    assert_eq!(m.scalar_multiple_of_identity().unwrap().to_string(), "5");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn rmatrix_check_small_order() {
    let (code, out) = djones(&["rmatrix-check", "--N", "2"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() > 20);
}

#[test]
fn invariance_with_files() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let (code, out) = djones(&[
        "invariance", "--knot", "4_1", "--diagram", &format!("{data}/4_1.json"), &format!("{data}/4_1_alt.json"), "--N", "2..3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
}
