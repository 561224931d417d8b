//! End-to-end tests driving the compiled binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn scratch() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("muperm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn muperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_muperm"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code_of(out: &Output) -> i32 {
    out.status.code().unwrap()
}

const M22: &str = r#"{"n": 2, "entries": [["1", "2"], ["3", "4"]]}"#;
const ONES3: &str = r#"{"n": 3, "entries": [["1","1","1"],["1","1","1"],["1","1","1"]]}"#;

#[test]
fn compute_prints_the_reference_polynomials() {
    let dir = scratch();
    let m22 = write(&dir, "m22.json", M22);
    let out = muperm(&["compute", m22.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "4 + 6mu");

    let mut rows = Vec::new();
    for i in 0..5 {
        let row: Vec<String> = (0..5)
            .map(|j| format!("\"{}\"", i32::from(i == j)))
            .collect();
        rows.push(format!("[{}]", row.join(",")));
    }
    let id5 = write(
        &dir,
        "id5.json",
        &format!(r#"{{"n": 5, "entries": [{}]}}"#, rows.join(",")),
    );
    let out = muperm(&["compute", id5.to_str().unwrap()]);
    assert_eq!(stdout_of(&out).trim(), "1");

    let ones = write(&dir, "ones3.json", ONES3);
    let out = muperm(&["compute", ones.to_str().unwrap()]);
    assert_eq!(stdout_of(&out).trim(), "1 + 2mu + 2mu^2 + mu^3");
}

#[test]
fn eval_at_minus_one_is_the_determinant() {
    let dir = scratch();
    let m22 = write(&dir, "m22-eval.json", M22);
    let out = muperm(&["eval", m22.to_str().unwrap(), "--mu", "-1"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "-2");

    let out = muperm(&["--json", "eval", m22.to_str().unwrap(), "--mu", "-1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["value"], "-2");
    assert_eq!(v["mu"], "-1");
}

#[test]
fn qdet_renders_signed_weighted_terms() {
    let dir = scratch();
    let m22 = write(&dir, "m22-qdet.json", M22);
    let out = muperm(&["qdet", m22.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "4 - 6q1");
}

#[test]
fn applicable_methods_print_identical_polynomials() {
    let dir = scratch();
    let path = dir.join("band5.json");
    let out = muperm(&[
        "gen",
        "--kind",
        "path-pd",
        "--n",
        "5",
        "--seed",
        "31",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 0);
    let file = path.to_str().unwrap();
    let reference = stdout_of(&muperm(&["--json", "compute", file, "--method", "naive"]));
    for method in ["laplace", "tridiagonal", "tree", "auto"] {
        let out = muperm(&["--json", "compute", file, "--method", method]);
        assert_eq!(code_of(&out), 0, "method {method}");
        assert_eq!(stdout_of(&out), reference, "method {method}");
    }

    let star = dir.join("star5.json");
    muperm(&[
        "gen", "--kind", "star-pd", "--n", "5", "--seed", "32", "--out",
        star.to_str().unwrap(),
    ]);
    let file = star.to_str().unwrap();
    let reference = stdout_of(&muperm(&["--json", "compute", file, "--method", "naive"]));
    for method in ["star", "tree", "auto"] {
        let out = muperm(&["--json", "compute", file, "--method", method]);
        assert_eq!(stdout_of(&out), reference, "method {method}");
    }
}

#[test]
fn precondition_failures_exit_three() {
    let dir = scratch();
    let dense = write(&dir, "dense.json", ONES3);
    // Dense support is no tree, no star, no band.
    for method in ["tree", "star", "tridiagonal"] {
        let out = muperm(&["compute", dense.to_str().unwrap(), "--method", method]);
        assert_eq!(code_of(&out), 3, "method {method}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn usage_and_parse_failures_exit_two() {
    let out = muperm(&["compute", "/nonexistent/nowhere.json"]);
    assert_eq!(code_of(&out), 2);

    let dir = scratch();
    let bad = write(&dir, "bad.json", "{\"n\": 2, \"entries\": [[\"1\"]]}");
    let out = muperm(&["compute", bad.to_str().unwrap()]);
    assert_eq!(code_of(&out), 2);

    let out = muperm(&["check", "no-such-claim", "--trials", "1"]);
    assert_eq!(code_of(&out), 2);

    // Unknown flags are clap usage errors.
    let out = muperm(&["compute", "--definitely-not-a-flag"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn naive_cap_is_overridable_through_the_environment() {
    let dir = scratch();
    let path = dir.join("band10.json");
    muperm(&[
        "gen", "--kind", "path-pd", "--n", "10", "--seed", "5", "--out",
        path.to_str().unwrap(),
    ]);
    let file = path.to_str().unwrap();
    let out = muperm(&["compute", file, "--method", "naive"]);
    assert_eq!(code_of(&out), 3, "ten is past the default expansion cap");

    let raised = Command::new(env!("CARGO_BIN_EXE_muperm"))
        .args(["compute", file, "--method", "naive"])
        .env("MUPERM_MAX_N", "10")
        .output()
        .unwrap();
    assert_eq!(code_of(&raised), 0);
    let banded = muperm(&["compute", file, "--method", "tridiagonal"]);
    assert_eq!(stdout_of(&raised), stdout_of(&banded));
}

#[test]
fn monotonicity_campaign_holds_at_proved_size() {
    let out = muperm(&[
        "check", "monotone", "--n", "3", "--trials", "20", "--seed", "1",
    ]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("holds"));

    let out = muperm(&[
        "--json", "check", "monotone", "--n", "3", "--trials", "20", "--seed", "1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["claim"], "monotone");
    assert_eq!(v["status"], "holds");
    assert_eq!(v["trials"], 20);
}

#[test]
fn labeling_subcommands_report_and_repair() {
    let dir = scratch();
    let crossing = write(&dir, "crossing.json", r#"{"n": 4, "edges": [[1, 3], [2, 4]]}"#);
    let out = muperm(&["labeling", "validate", crossing.to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stdout_of(&out).contains("{1, 3}"));
    assert!(stdout_of(&out).contains("{2, 4}"));

    let nested = write(&dir, "nested.json", r#"{"n": 4, "edges": [[1, 4], [2, 3]]}"#);
    let out = muperm(&["labeling", "validate", nested.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "valid");

    // A path listed in scrambled order crosses; the relabeler fixes it.
    let scrambled = write(
        &dir,
        "scrambled.json",
        r#"{"n": 5, "edges": [[1, 3], [1, 4], [2, 4], [2, 5]]}"#,
    );
    let out = muperm(&["--json", "labeling", "relabel", scrambled.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let images: Vec<usize> = v["images"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect();
    assert_eq!(images.len(), 5);
    let mut sorted = images.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![1, 2, 3, 4, 5]);

    // Cycles cannot be repaired: precondition failure.
    let cycle = write(
        &dir,
        "cycle.json",
        r#"{"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]}"#,
    );
    let out = muperm(&["labeling", "relabel", cycle.to_str().unwrap()]);
    assert_eq!(code_of(&out), 3);
}

#[test]
fn generation_is_reproducible_byte_for_byte() {
    let dir = scratch();
    let a = dir.join("gen-a.json");
    let b = dir.join("gen-b.json");
    for path in [&a, &b] {
        let out = muperm(&[
            "gen", "--kind", "hermitian-pd", "--n", "4", "--seed", "77", "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code_of(&out), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    // And the generated file feeds straight back into compute.
    let first = muperm(&["--json", "compute", a.to_str().unwrap()]);
    let second = muperm(&["--json", "compute", b.to_str().unwrap()]);
    assert_eq!(code_of(&first), 0);
    assert_eq!(stdout_of(&first), stdout_of(&second));
}

#[test]
fn schur_reports_cover_both_modes() {
    let dir = scratch();
    let m22 = write(&dir, "m22-schur.json", M22);
    let out = muperm(&["schur", m22.to_str().unwrap(), "--identity"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("identity holds: 4 + 6mu"));

    let ones = write(&dir, "ones3-schur.json", ONES3);
    let out = muperm(&["--json", "schur", ones.to_str().unwrap(), "--gamma-psd"]);
    assert_eq!(code_of(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["n"], 3);
    assert_eq!(v["mu"].as_array().unwrap().len(), 21);

    let out = muperm(&["schur", m22.to_str().unwrap()]);
    assert_eq!(code_of(&out), 2, "a mode flag is required");
}

#[test]
fn replaying_a_witness_file_reruns_the_single_instance() {
    let dir = scratch();
    // A hand-written verdict wrapping a definite matrix; the stored status
    // is deliberately wrong so the replay result must come from a fresh run.
    let witness = write(
        &dir,
        "witness-monotone-0.json",
        r#"{
  "claim": "monotone",
  "status": "counterexample",
  "trials": 1,
  "seed": 0,
  "witness": {
    "matrix": {"n": 2, "entries": [["2", "1"], ["1", "2"]]},
    "detail": "hand-written fixture"
  }
}"#,
    );
    let out = muperm(&["--json", "check", "--replay", witness.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["status"], "holds");
}
