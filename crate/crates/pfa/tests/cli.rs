//! End-to-end tests of the `pfa` binary: subcommands, text output, golden
//! files, exit codes, and report determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn pfa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn write_temp(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).expect("write temp file");
    path
}

#[test]
fn witness_outputs_match_the_golden_files() {
    let cases = [
        (vec!["witness", "source", "--m", "1", "--alpha", "1"], "source_m1_a1.txt"),
        (vec!["witness", "divisor", "--n", "1", "--alpha", "1"], "divisor_n1_a1.txt"),
        (vec!["witness", "source", "--m", "2", "--alpha", "3"], "source_m2_a3.txt"),
        (vec!["witness", "divisor", "--n", "2", "--alpha", "3"], "divisor_n2_a3.txt"),
        (vec!["witness", "source", "--m", "2", "--alpha", "4"], "source_m2_a4.txt"),
        (vec!["witness", "divisor", "--n", "1", "--alpha", "4"], "divisor_n1_a4.txt"),
    ];
    for (args, file) in cases {
        let output = pfa(&args);
        assert_eq!(exit_code(&output), 0, "{args:?}");
        assert_eq!(stdout(&output), golden(file), "{args:?}");
    }
}

#[test]
fn witness_cycle_and_out_flag() {
    let output = pfa(&["witness", "cycle", "--t", "0"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(
        stdout(&output),
        "alphabet: a\nstates: 1\ninitial: 1\nfinals:\ntrans a: 1\n"
    );

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cycle.txt");
    let output = pfa(&["witness", "cycle", "--t", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    let written = std::fs::read_to_string(&out).unwrap();
    assert_eq!(
        written,
        "alphabet: a\nstates: 3\ninitial: 1\nfinals: 1 2\ntrans a: 2 3 1\n"
    );

    // k(n+1) states: 3 * 2 = 6
    let output = pfa(&["witness", "divisor", "--n", "1", "--alpha", "2"]);
    assert!(stdout(&output).contains("states: 6"));
}

#[test]
fn witness_rejects_bad_parameters() {
    let output = pfa(&["witness", "source", "--m", "3", "--alpha", "1"]);
    assert_eq!(exit_code(&output), 2);
    let output = pfa(&["witness", "source", "--m", "0", "--alpha", "1"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn quotient_of_the_reference_pair() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_temp(&dir, "a.txt", &golden("source_m2_a3.txt"));
    let b = write_temp(&dir, "b.txt", &golden("divisor_n2_a3.txt"));
    let out = dir.path().join("quotient.txt");
    let output = pfa(&[
        "quotient",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);
    let summary = stdout(&output);
    assert!(summary.contains("saturated finals: 3"), "{summary}");
    assert!(summary.contains("asc(A/B): 3"), "{summary}");
    assert!(summary.contains("dividend permutation automaton: yes"), "{summary}");

    let quotient = std::fs::read_to_string(&out).unwrap();
    assert!(quotient.contains("finals: 1 2 3"), "{quotient}");
    // only the finals line differs from the dividend
    assert_eq!(
        quotient.replace("finals: 1 2 3", "finals: 1 2"),
        golden("source_m2_a3.txt")
    );
}

#[test]
fn quotient_of_the_unary_example_pair() {
    // dividend: even number of a's; divisor: odd number of a's
    let dir = tempfile::tempdir().unwrap();
    let a = write_temp(
        &dir,
        "k.txt",
        "alphabet: a\nstates: 2\ninitial: 1\nfinals: 1\ntrans a: 2 1\n",
    );
    let b = write_temp(
        &dir,
        "l.txt",
        "alphabet: a\nstates: 2\ninitial: 1\nfinals: 2\ntrans a: 2 1\n",
    );
    let output = pfa(&["quotient", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("finals: 2\n"), "{}", stdout(&output));
}

#[test]
fn asc_and_minimize_commands() {
    let dir = tempfile::tempdir().unwrap();
    let source = write_temp(&dir, "source.txt", &golden("source_m2_a3.txt"));
    let output = pfa(&["asc", source.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "2\n");

    let empty = write_temp(
        &dir,
        "empty.txt",
        "alphabet: a\nstates: 1\ninitial: 1\nfinals:\ntrans a: 1\n",
    );
    let output = pfa(&["asc", empty.to_str().unwrap()]);
    assert_eq!(stdout(&output), "0\n");

    // a padded automaton with two equivalent states collapses
    let padded = write_temp(
        &dir,
        "padded.txt",
        "alphabet: a b\nstates: 3\ninitial: 1\nfinals: 2 3\ntrans a: 2 1 1\ntrans b: 3 1 1\n",
    );
    let output = pfa(&["minimize", padded.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    let minimal = stdout(&output);
    assert!(minimal.contains("states: 2"), "{minimal}");

    // minimizing the minimal output is byte-identical
    let minimal_path = write_temp(&dir, "minimal.txt", &minimal);
    let output = pfa(&["minimize", minimal_path.to_str().unwrap()]);
    assert_eq!(stdout(&output), minimal);
}

#[test]
fn equiv_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let padded = write_temp(
        &dir,
        "padded.txt",
        "alphabet: a\nstates: 3\ninitial: 1\nfinals: 2 3\ntrans a: 2 3 2\n",
    );
    let output = pfa(&["minimize", padded.to_str().unwrap()]);
    let minimal = write_temp(&dir, "minimal.txt", &stdout(&output));

    let output = pfa(&["equiv", padded.to_str().unwrap(), minimal.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "equal\n");

    let one = write_temp(
        &dir,
        "c1.txt",
        "alphabet: a\nstates: 2\ninitial: 1\nfinals: 1\ntrans a: 2 1\n",
    );
    let two = write_temp(
        &dir,
        "c2.txt",
        "alphabet: a\nstates: 3\ninitial: 1\nfinals: 1 2\ntrans a: 2 3 1\n",
    );
    let output = pfa(&["equiv", one.to_str().unwrap(), two.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 1);
    assert_eq!(stdout(&output), "different\n");
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write_temp(&dir, "broken.txt", "alphabet: ab\nstates: 1\n");
    let output = pfa(&["asc", broken.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 2);

    let output = pfa(&["asc", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(exit_code(&output), 2);

    let output = pfa(&["no-such-command"]);
    assert_eq!(exit_code(&output), 2);

    // alphabet mismatch is a usage-level failure
    let unary = write_temp(
        &dir,
        "unary.txt",
        "alphabet: a\nstates: 1\ninitial: 1\nfinals: 1\ntrans a: 1\n",
    );
    let binary = write_temp(
        &dir,
        "binary.txt",
        "alphabet: a b\nstates: 1\ninitial: 1\nfinals: 1\ntrans a: 1\ntrans b: 1\n",
    );
    let output = pfa(&["equiv", unary.to_str().unwrap(), binary.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn verify_theorem_passes_and_is_deterministic() {
    let args = [
        "verify-theorem",
        "--m", "1", "--n", "1",
        "--alpha-max", "4",
        "--cycle-bound", "6",
        "--state-bound", "3",
        "--alphabet-bound", "2",
        "--format", "machine",
    ];
    let first = pfa(&args);
    assert_eq!(exit_code(&first), 0);
    let report = stdout(&first);
    for alpha in 1..=4 {
        assert!(report.contains(&format!("alpha={alpha}")), "{report}");
    }
    assert!(report.contains("result=pass"), "{report}");
    assert!(!report.contains("alpha=0"), "{report}");

    let second = pfa(&args);
    assert_eq!(stdout(&second), report);

    let output = pfa(&["verify-theorem", "--m", "0", "--n", "1", "--alpha-max", "2"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn unary_bruteforce_reports() {
    let args = [
        "unary-bruteforce",
        "--m", "1", "--n", "1",
        "--cycle-bound", "6",
        "--format", "machine",
    ];
    let output = pfa(&args);
    assert_eq!(exit_code(&output), 0);
    let report = stdout(&output);
    assert!(report.contains("alpha=1 attained=yes"), "{report}");
    assert!(report.contains("partial=no"), "{report}");
    assert_eq!(stdout(&pfa(&args)), report);

    // text format carries the human summary and the machine section
    let output = pfa(&[
        "unary-bruteforce",
        "--m", "1", "--n", "2",
        "--cycle-bound", "8",
    ]);
    let report = stdout(&output);
    assert!(report.contains("unary right-quotient spectrum scan"), "{report}");
    assert!(report.contains("spectrum m=1 n=2 cycle-bound=8"), "{report}");

    let output = pfa(&["unary-bruteforce", "--m", "0", "--n", "1"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn zero_scan_reports() {
    let output = pfa(&[
        "zero-scan",
        "--state-bound", "3",
        "--alphabet-bound", "2",
        "--format", "machine",
    ]);
    assert_eq!(exit_code(&output), 0);
    let report = stdout(&output);
    assert!(report.contains("result=pass"), "{report}");
    assert!(report.contains("alphabet=ab"), "{report}");
    assert!(report.contains("empty-quotients=0"), "{report}");
}
