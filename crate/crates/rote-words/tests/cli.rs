//! End-to-end tests of the command-line front end.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rote-words"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout should be UTF-8")
}

#[test]
fn generate_prints_the_bare_word() {
    let output = run(&["generate", "--directive", "|bB", "--length", "13"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "0100101001001\n");

    let output = run(&[
        "generate", "--directive", "|bBb", "--kind", "rote", "--length", "42",
    ]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "001110001100011100011000111000110001110011\n");
}

#[test]
fn generate_accepts_zero_length() {
    let output = run(&["generate", "--directive", "|bB", "--length", "0"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "\n");
}

#[test]
fn analyze_text_report() {
    let output = run(&["analyze", "--directive", "|bBb", "--index", "1"]);
    assert!(output.status.success());
    let expected = "\
directive: |bBb
index: 1
bispecial: 0
r: 01
s: 0
matrix: [[1,1],[1,0]]
type: US(1)
rote bispecial: 00
A: 0011
B: 00111
C: 0
";
    assert_eq!(stdout(&output), expected);
}

#[test]
fn analyze_json_matches_text() {
    let output = run(&[
        "analyze", "--directive", "|bBb", "--index", "1", "--format", "json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["command"], "analyze");
    assert_eq!(value["directive"], "|bBb");
    let payload = &value["payload"];
    assert_eq!(payload["index"], 1);
    assert_eq!(payload["bispecial"], "0");
    assert_eq!(payload["r"], "01");
    assert_eq!(payload["s"], "0");
    assert_eq!(payload["matrix"], "[[1,1],[1,0]]");
    assert_eq!(payload["prefix_type"], "US(1)");
    assert_eq!(payload["rote_bispecial"], "00");
    assert_eq!(payload["a"], "0011");
    assert_eq!(payload["b"], "00111");
    assert_eq!(payload["c"], "0");
}

#[test]
fn derive_reports_oracle_agreement() {
    let output = run(&[
        "derive", "--directive", "|bB", "--index", "0", "--length", "18", "--check", "oracle",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "ABABAACAACAABABAAC");
    assert_eq!(lines[1], "check: oracle");
    assert_eq!(lines[2], "agreement: true");
}

#[test]
fn derive_reports_interval_agreement() {
    let output = run(&[
        "derive", "--directive", "|bB", "--index", "2", "--length", "17", "--check", "iet",
        "--format", "json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["payload"]["word"], "BACCBACCBBACBBACB");
    assert_eq!(value["payload"]["check"], "iet");
    assert_eq!(value["payload"]["agreement"], true);
}

#[test]
fn fix_lists_verified_morphisms() {
    let output = run(&["fix", "--z", "bB"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "z: bB");
    assert_eq!(lines[1], "q: 3");
    assert_eq!(lines[2], "entries: 6");
    assert_eq!(lines[3], "distinct: 3");
    assert_eq!(
        lines[4],
        "sigma_0 (type SU(1), span 3, class 0, verified): A->AB,B->ABAACAACA,C->ABAACA"
    );
    assert_eq!(
        lines[5],
        "sigma_1 (type US(1), span 3, class 1, verified): A->BBCAC,B->BBCACAC,C->B"
    );
    assert_eq!(
        lines[6],
        "sigma_2 (type UU(1), span 3, class 2, verified): A->BACCB,B->BACC,C->BACB"
    );
    assert_eq!(lines.len(), 10);
}

#[test]
fn rote7_reports_projection_agreement() {
    let output = run(&["rote7", "--n", "0", "--length", "50"]);
    assert!(output.status.success());
    let expected = "\
projected: 00110110010011001001101100110110010011011001101100
expanded: 00110110010011001001101100110110010011011001101100
agreement: true
";
    assert_eq!(stdout(&output), expected);
}

#[test]
fn output_is_deterministic() {
    let first = run(&["fix", "--z", "bBb", "--format", "json"]);
    let second = run(&["fix", "--z", "bBb", "--format", "json"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn malformed_directive_exits_2() {
    let output = run(&["generate", "--directive", "xx|"]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.starts_with("error:"), "stderr was: {stderr}");
}

#[test]
fn unusable_directive_exits_3() {
    let output = run(&["generate", "--directive", "|b"]);
    assert_eq!(output.status.code(), Some(3));

    let output = run(&["fix", "--z", "b"]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn bad_flags_exit_2() {
    let output = run(&["generate", "--directive", "|bB", "--kind", "bogus"]);
    assert_eq!(output.status.code(), Some(2));

    let output = run(&["frobnicate"]);
    assert_eq!(output.status.code(), Some(2));
}
