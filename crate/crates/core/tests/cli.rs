use std::path::PathBuf;
use std::process::Command;

use qmeta::cli::{run, Output};

fn manifest_path(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join(rel)
        .to_string_lossy()
        .into_owned()
}

fn qmeta(args: &[&str]) -> Output {
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(rel) => manifest_path(rel),
            None => a.to_string(),
        })
        .collect();
    run(std::iter::once("qmeta".to_string()).chain(args))
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(manifest_path(&format!("tests/golden/{name}"))).unwrap()
}

#[track_caller]
fn assert_golden(args: &[&str], name: &str, code: i32) {
    let out = qmeta(args);
    assert_eq!(out.code, code, "{args:?}: {}", out.stderr);
    assert_eq!(out.stdout, golden(name), "{args:?}");
}

#[test]
fn derivation_goldens() {
    assert_golden(
        &["derive", "classical", "A", "B"],
        "derive_classical_A_B.txt",
        0,
    );
    assert_golden(
        &["derive", "quantum", "0.6", "0.8i"],
        "derive_quantum_0.6_0.8i.txt",
        0,
    );
    assert_golden(
        &["--json", "derive", "quantum", "0.6", "0.8i"],
        "derive_quantum_0.6_0.8i.json",
        0,
    );
}

#[test]
fn interpret_goldens() {
    assert_golden(
        &["interpret", "@scripts/superposition.qml"],
        "interpret_superposition.txt",
        0,
    );
    assert_golden(
        &["--json", "interpret", "@scripts/superposition.qml"],
        "interpret_superposition.json",
        0,
    );
    assert_golden(
        &["interpret", "@scripts/basis_atom.qml"],
        "interpret_basis_atom.txt",
        0,
    );
}

#[test]
fn check_goldens() {
    assert_golden(&["check", "@scripts/mixed.qml"], "check_mixed.txt", 0);
    assert_golden(
        &["--json", "check", "@scripts/unnormalized.qml"],
        "check_unnormalized.json",
        2,
    );
    assert_eq!(qmeta(&["check", "@scripts/superposition.qml"]).code, 0);

    let syntax = qmeta(&["check", "@scripts/malformed.qml"]);
    assert_eq!(syntax.code, 1);
    assert_eq!(
        syntax.stderr,
        "error: line 2: syntax error at byte 10: expected real number\n"
    );

    let unnormalized = qmeta(&["check", "@scripts/unnormalized.qml"]);
    assert!(unnormalized
        .stderr
        .contains("sum of |degree|^2 = 2, must equal 1"));
}

#[test]
fn measure_goldens() {
    assert_golden(
        &[
            "measure",
            "@scripts/biased.qml",
            "--trials",
            "100000",
            "--seed",
            "42",
        ],
        "measure_biased_100000_42.txt",
        0,
    );
    assert_golden(
        &[
            "--json",
            "measure",
            "@scripts/superposition.qml",
            "--trials",
            "1",
            "--seed",
            "42",
        ],
        "measure_superposition_1_42.json",
        0,
    );
    assert_eq!(
        qmeta(&["measure", "@scripts/superposition.qml", "--trials", "0"]).code,
        1
    );
}

#[test]
fn goedel_goldens() {
    assert_golden(
        &["goedel", "--degree", "0.9+0.1i"],
        "goedel_0.9+0.1i.txt",
        0,
    );
    assert_golden(
        &["--json", "goedel", "--degree", "0.9+0.1i"],
        "goedel_0.9+0.1i.json",
        0,
    );
    let certain = qmeta(&["goedel", "--degree", "1"]);
    assert!(certain.stdout.contains("v(P(G_F)) = 1.00000000000\n"));
    assert!(certain.stdout.ends_with("verdict: classically certain\n"));
    assert_eq!(qmeta(&["goedel", "--degree", "2"]).code, 2);
}

#[test]
fn every_script_statement_result_is_one_json_record() {
    let out = qmeta(&["--json", "check", "@scripts/mixed.qml"]);
    let records: Vec<serde_json::Value> = out
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 4);
    assert!(records.iter().all(|r| r["ok"] == true));
}

#[test]
fn malformed_input_never_panics() {
    for body in [
        "",
        "basis:",
        "basis: p0\n|-[",
        "basis: p0\nx: compose\n",
        "basis: p0\n|- p0 [0.5]& p0\n",
        "basis: 1a\n",
    ] {
        let path = std::env::temp_dir().join(format!(
            "qmeta-fuzz-{}-{}.qml",
            std::process::id(),
            body.len()
        ));
        std::fs::write(&path, body).unwrap();
        for cmd in ["check", "interpret", "measure"] {
            let out = run(["qmeta", cmd, path.to_str().unwrap()]);
            assert!(matches!(out.code, 1 | 2), "{cmd} {body:?}: {out:?}");
        }
    }
    assert_eq!(run(["qmeta", "check", "/nonexistent/script.qml"]).code, 1);
    assert_eq!(run(["qmeta", "frobnicate"]).code, 1);
    assert_eq!(run(["qmeta", "--help"]).code, 0);
}

#[test]
fn binary_matches_library() {
    let bin = env!("CARGO_BIN_EXE_qmeta");
    let out = Command::new(bin)
        .args(["derive", "quantum", "0.6", "0.8i"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        golden("derive_quantum_0.6_0.8i.txt")
    );

    let out = Command::new(bin)
        .args(["derive", "quantum", "1", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("normalization violation"));

    let script = manifest_path("scripts/malformed.qml");
    let out = Command::new(bin).args(["check", &script]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
