use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn dwedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dwedge"))
        .args(args)
        .output()
        .unwrap()
}

fn dwedge_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dwedge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TWO_BOWTIES: &str = r#"{"wedges": [
  {"l1": {"a": "1", "b": "0"}, "l2": {"a": "-1", "b": "0"}, "parity": -1, "closed": true},
  {"l1": {"a": "1", "b": "-4"}, "l2": {"a": "-1", "b": "4"}, "parity": -1, "closed": true}
]}"#;

const DISJOINT: &str = r#"{"wedges": [
  {"l1": {"a": "1", "b": "0"}, "l2": {"a": "-1", "b": "0"}, "parity": -1, "closed": false},
  {"l1": {"a": "1", "b": "0"}, "l2": {"a": "-1", "b": "0"}, "parity": 1, "closed": false}
]}"#;

#[test]
fn intersect_reports_components() {
    let out = dwedge_stdin(&["intersect", "--in", "-"], TWO_BOWTIES);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "nonempty");
    assert!(v["component_count"].as_u64().unwrap() >= 1);

    let out = dwedge_stdin(&["intersect", "--in", "-", "--algo", "general"], DISJOINT);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "empty");
}

#[test]
fn decide_none_is_success() {
    let out = dwedge_stdin(&["decide", "--in", "-"], DISJOINT);
    assert_eq!(out.status.code(), Some(0));
    let out = dwedge_stdin(&["decide", "--in", "-"], TWO_BOWTIES);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(
        dwedge_stdin(&["decide", "--in", "-"], "not json")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dwedge(&["intersect", "--in", "/nonexistent/file.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dwedge(&["generate", "grating", "--k", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(dwedge(&["no-such-command"]).status.code(), Some(2));
    let parallel = r#"{"wedges": [{"l1": {"a": "1", "b": "0"}, "l2": {"a": "1", "b": "2"}, "parity": 1, "closed": true}]}"#;
    assert_eq!(
        dwedge_stdin(&["intersect", "--in", "-"], parallel)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn failed_verification_exits_3() {
    // the family is pierced by two chords, so that check fails
    let out = dwedge(&["verify", "nonagon", "--precision", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let reports = json(&out);
    let failed: Vec<&str> = reports
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["result"] == "fail")
        .map(|r| r["check"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["two-lines-impossible"]);
}

#[test]
fn verify_suites_pass() {
    let out = dwedge(&["verify", "grating", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["result"] == "pass"));
    assert_eq!(
        dwedge(&["verify", "oracle", "--n", "5", "--seed", "3"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        dwedge(&["verify", "reduction", "--numbers", "1,2,-3"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        dwedge(&["verify", "reduction", "--numbers", "1,2,4"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn generated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let grating = dir.path().join("grating.json");
    assert_eq!(
        dwedge(&["generate", "grating", "--k", "2", "--out", path(&grating)])
            .status
            .code(),
        Some(0)
    );
    let out = dwedge(&["intersect", "--in", path(&grating), "--algo", "general"]);
    assert_eq!(json(&out)["component_count"], 9);

    let sas = dir.path().join("sas.json");
    assert_eq!(
        dwedge(&[
            "generate",
            "sas-from-3sum",
            "--numbers",
            "1,2,-3",
            "--out",
            path(&sas)
        ])
        .status
        .code(),
        Some(0)
    );
    let found = json(&dwedge(&["stab", "--in", path(&sas)]));
    assert_eq!(found["status"], "found");
    dwedge(&[
        "generate",
        "sas-from-3sum",
        "--numbers",
        "1,2,3",
        "--out",
        path(&sas),
    ]);
    let out = dwedge(&["stab", "--in", path(&sas)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "none");
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dwedge(&[
        "generate",
        "random",
        "--n",
        "12",
        "--hourglasses",
        "3",
        "--seed",
        "9",
    ]);
    let b = dwedge(&[
        "generate",
        "random",
        "--n",
        "12",
        "--hourglasses",
        "3",
        "--seed",
        "9",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let input = dir.path().join("random.json");
    std::fs::write(&input, &a.stdout).unwrap();
    let r1 = dwedge(&["intersect", "--in", path(&input)]);
    let r2 = dwedge(&["intersect", "--in", path(&input)]);
    assert_eq!(r1.status.code(), Some(0));
    assert_eq!(r1.stdout, r2.stdout);

    let (s1, s2) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    assert_eq!(
        dwedge(&["render", "--in", path(&input), "--svg", path(&s1)])
            .status
            .code(),
        Some(0)
    );
    dwedge(&["render", "--in", path(&input), "--svg", path(&s2)]);
    let svg = std::fs::read_to_string(&s1).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg, std::fs::read_to_string(&s2).unwrap());
}

#[test]
fn bench_writes_csv() {
    let out = dwedge(&[
        "bench", "--algo", "general", "--sizes", "8,16", "--seed", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,algorithm,seconds");
    assert_eq!(lines.len(), 3);
    for (line, n) in lines[1..].iter().zip(["8", "16"]) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[..2], [n, "general"]);
        assert!(cols[2].parse::<f64>().unwrap() >= 0.0);
    }
    assert_eq!(dwedge(&["bench", "--sizes", "abc"]).status.code(), Some(2));
}
