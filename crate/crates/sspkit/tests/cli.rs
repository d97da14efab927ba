//! End-to-end checks of the command-line binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sspkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn registry_tsv() {
    let out = run(&["registry", "--type", "G2", "--format", "tsv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "type\trank\texponents\top_orbit_count\torder\nG2\t2\t1,5\t2\t12\n"
    );
}

#[test]
fn classify_is_byte_stable() {
    let a = run(&["classify", "--type", "G2"]);
    let b = run(&["classify", "--type", "G2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["a"], 1);
    assert_eq!(v["dim"], "2");
    assert_eq!(v["gamma"], 2);
}

#[test]
fn classify_h4_exact_field() {
    let out = run(&["classify", "--type", "H4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], "24");
    assert_eq!(v["a"], 6);
    // c = 1080 + 480·√5 exactly
    let c = v["c"].to_string();
    assert!(c.contains("1080"), "{c}");
    assert!(c.contains("480"), "{c}");
}

#[test]
fn table_contains_known_line() {
    let out = run(&["table", "--max-rank", "30", "--format", "tsv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("B\t6\ttrue\t2\n"), "{text}");
    assert!(text.contains("A\t27\ttrue\t7\n"), "{text}");
    assert!(text.contains("E8\t8\ttrue\t-\n"), "{text}");
    assert!(!text.contains("B\t7\t"), "{text}");
}

#[test]
fn cell_b2_components() {
    let out = run(&["cell", "--type", "B", "--param", "2", "--format", "tsv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{0,2}\t{1}"), "{text}");
    assert!(text.contains("# harmonic_sum\t1"), "{text}");
    assert!(text.contains("# alternating_sum\t0"), "{text}");

    let primed = run(&["cell", "--type", "B", "--param", "2", "--prime", "--format", "tsv"]);
    assert!(primed.status.success());
    assert!(stdout(&primed).contains("{1,2}\t{0}"));
}

#[test]
fn cell_prime_rejected_for_simply_laced() {
    let out = run(&["cell", "--type", "E6", "--prime"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn conj_g2() {
    let out = run(&["conj", "--type", "G2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["m_found"], 4);
    assert_eq!(v["class_size"], 2);
}

#[test]
fn conj_budget_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_sspkit"))
        .args(["conj", "--type", "B", "--param", "6"])
        .env("SSPKIT_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("46080"), "{err}");
}

#[test]
fn verify_cells_suite() {
    let out = run(&["verify", "--suite", "cells", "--format", "tsv"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.starts_with("id\texpected\tactual\tpass\tsource\n"));
    assert!(!text.contains("\tfalse\t"), "{text}");
}

#[test]
fn degree_partition() {
    let out = run(&["degree", "--partition", "2,1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gamma"], 1);
    assert_eq!(v["group_superspecial"], true);
}

#[test]
fn output_file_is_written_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.tsv");
    std::fs::write(&path, "stale").unwrap();
    let out = run(&[
        "registry",
        "--type",
        "G2",
        "--format",
        "tsv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.starts_with("type\trank"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["table", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(run(&["registry", "--type", "Z9"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--type", "A", "--param", "5"]).status.code(), Some(2));
}
