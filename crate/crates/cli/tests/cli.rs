use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gainline")).args(args).output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn group_summary() {
    let v = ok_json(&["group", p(&data("q8.json"))]);
    assert_eq!(v["order"], 8);
    assert_eq!(v["abelian"], false);
    assert_eq!(v["central_weak_involutions"], serde_json::json!(["1", "-1"]));
}

#[test]
fn line_of_paw_and_star_and_k2() {
    let v = ok_json(&["line", p(&data("paw.json"))]);
    assert_eq!(v["line"]["n"], 4);
    assert_eq!(v["line"]["edges"].as_array().unwrap().len(), 5);

    let v = ok_json(&["line", p(&data("star3.json"))]);
    assert_eq!(v["line"]["edges"], serde_json::json!([[1, 2], [1, 3], [2, 3]]));
    assert_eq!(v["shared_vertex"], serde_json::json!([1, 1, 1]));

    let dir = tempfile::tempdir().unwrap();
    let k2 = dir.path().join("k2.json");
    std::fs::write(&k2, r#"{"n": 2, "edges": [[1, 2]]}"#).unwrap();
    let v = ok_json(&["line", p(&k2)]);
    assert_eq!(v["line"]["n"], 1);
    assert_eq!(v["line"]["edges"], serde_json::json!([]));
}

#[test]
fn paw_lift_is_recognized_and_passes_the_spectral_test() {
    let dir = tempfile::tempdir().unwrap();
    let zeta = dir.path().join("zeta.json");
    let out = run(&["gainline", p(&data("paw_q8.json")), "--s1", "-1", "--s2", "-1", "-o", p(&zeta)]);
    assert!(out.status.success());

    let lifted: Value = serde_json::from_str(&std::fs::read_to_string(&zeta).unwrap()).unwrap();
    assert_eq!(lifted["graph"]["n"], 4);
    assert_eq!(lifted["gains"].as_array().unwrap().len(), 5);

    let v = ok_json(&["check", "gainline", p(&zeta), "--root", p(&data("paw.json")), "--s1", "-1", "--s2", "-1"]);
    assert_eq!(v["gain_line"], true);
    assert_eq!(v["witness"]["phase"].as_array().unwrap().len(), 4);

    let v = ok_json(&["check", "obstruction", p(&zeta), "--rep", "q8_2dim", "--s2", "-1"]);
    assert_eq!(v["not_gain_line"], false);
    assert!(v["verdicts"][0]["max_eig"].as_f64().unwrap() <= 2.0 + 1e-8);
}

#[test]
fn two_sided_violates_both_bounds() {
    let v = ok_json(&[
        "check",
        "obstruction",
        p(&data("two_sided_q8.json")),
        "--rep",
        p(&data("q8_2dim.json")),
        "--rep",
        "q8_2dim",
        "--s2",
        "-1",
    ]);
    assert_eq!(v["not_gain_line"], true);
    let expected = (10.0 + 2.0 * 17f64.sqrt()).sqrt() / 2.0;
    for verdict in v["verdicts"].as_array().unwrap() {
        assert_eq!(verdict["violated"], "gainline");
        assert!((verdict["max_eig"].as_f64().unwrap() - expected).abs() < 1e-8);
        assert!((verdict["min_eig"].as_f64().unwrap() + expected).abs() < 1e-8);
    }

    let v = ok_json(&["check", "gainline", p(&data("two_sided_q8.json")), "--root", p(&data("paw.json")), "--s1", "-1", "--s2", "-1"]);
    assert_eq!(v["gain_line"], false);
    assert!(v["witness"].is_null());
}

#[test]
fn tree_is_balanced_and_paw_is_not() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("tree.json");
    std::fs::write(
        &tree,
        r#"{"graph": {"n": 4, "edges": [[1, 2], [1, 3], [1, 4]]}, "group": {"family": "quaternion8"}, "gains": ["i", "-j", "k"]}"#,
    )
    .unwrap();
    let v = ok_json(&["check", "balance", p(&tree)]);
    assert_eq!(v["balanced"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);

    let v = ok_json(&["check", "balance", p(&data("paw_q8.json"))]);
    assert_eq!(v["balanced"], false);
}

#[test]
fn switch_equivalence_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, gains: &str| {
        let f = dir.path().join(name);
        let body = format!(r#"{{"graph": "{}", "group": {{"family": "quaternion8"}}, "gains": {gains}}}"#, p(&data("paw.json")));
        std::fs::write(&f, body).unwrap();
        f
    };
    // switching by f = (i, 1, 1, 1) only touches the first edge
    let same = write("same.json", r#"["-1", "-j", "-k", "-i"]"#);
    // flipping a triangle edge multiplies the triangle gain by -1
    let other = write("other.json", r#"["-i", "j", "-k", "-i"]"#);

    let v = ok_json(&["check", "switch-equiv", p(&data("paw_q8.json")), p(&same)]);
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);

    let v = ok_json(&["check", "switch-equiv", p(&data("paw_q8.json")), p(&other)]);
    assert_eq!(v["equivalent"], false);
}

#[test]
fn k3_spectrum_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("k3.csv");
    assert!(run(&["spectrum", p(&data("k3_trivial.json")), "--rep", "trivial", "-o", p(&csv)]).status.success());
    let spectrum = gainline::io::parse_spectrum_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    for (x, y) in spectrum.eigenvalues.iter().zip([-1.0, -1.0, 2.0]) {
        assert!((x - y).abs() < 1e-10);
    }
}

#[test]
fn laplacian_spectrum_is_nonnegative_for_signed_paw() {
    let out = run(&["spectrum", p(&data("paw_q8.json")), "--rep", "q8_2dim", "--matrix", "laplacian", "--s", "-1"]);
    assert!(out.status.success());
    let spectrum = gainline::io::parse_spectrum_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(spectrum.len(), 8);
    assert!(spectrum.min().unwrap() > -1e-10);
}

#[test]
fn invalid_inputs_exit_nonzero() {
    let paw = data("paw_q8.json");
    // i is not central
    assert!(!run(&["gainline", p(&paw), "--s1", "i"]).status.success());
    assert!(!run(&["gainline", p(&paw), "--s2", "nope"]).status.success());
    assert!(!run(&["check", "balance", "does-not-exist.json"]).status.success());
    assert!(!run(&["spectrum", p(&paw), "--rep", "no_such_rep"]).status.success());
    assert!(!run(&["check", "gainline", p(&paw), "--root", p(&data("star3.json"))]).status.success());

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"graph": {"n": 2, "edges": [[1, 1]]}, "group": {"family": "sign"}, "gains": ["1"]}"#).unwrap();
    let out = run(&["check", "balance", p(&bad)]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
}
