use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn triad(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_triad"))
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
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn analyze_reads_stdin_in_order() {
    let out = triad(&["analyze"], "Ch\nA_\n");
    assert_eq!(out.status.code(), Some(0));
    let v = lines(&out);
    assert_eq!(v.len(), 2);
    assert_eq!(v[0]["gamma"], 3);
    assert_eq!(v[0]["witnesses"]["psi"], serde_json::json!([1, 2, 3, 1]));
    assert_eq!(v[1]["n"], 2);
}

#[test]
fn analyze_reports_bad_lines_and_exits_2() {
    let out = triad(&["analyze"], "Ch\nzz\n");
    assert_eq!(out.status.code(), Some(2));
    let v = lines(&out);
    assert_eq!(v[0]["psi"], 3);
    assert_eq!(v[1]["input"], "zz");
    assert!(v[1]["error"].as_str().unwrap().contains("graph6"));
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let input: String = ["Ch", "ECr_", "FCrfw", "C~", "Bw", "GCrb`o"].join("\n");
    let one = triad(&["--threads", "1", "analyze"], &input);
    let four = triad(&["--threads", "4", "analyze"], &input);
    assert_eq!(one.stdout, four.stdout);
    let again = triad(&["--threads", "4", "analyze"], &input);
    assert_eq!(four.stdout, again.stdout);

    let a = triad(&["--threads", "1", "enumerate", "--n", "6"], "");
    let b = triad(&["--threads", "3", "enumerate", "--n", "6"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8_lossy(&a.stdout).lines().count(), 112);
}

#[test]
fn construct_with_labels() {
    let out = triad(
        &["construct", "gstar", "--g", "3", "--h", "4", "--labels"],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let mut it = text.lines();
    let g6 = it.next().unwrap();
    let labels: Value = serde_json::from_str(it.next().unwrap()).unwrap();
    assert_eq!(labels["labels"][0], "u1");
    let analyzed = lines(&triad(&["analyze", g6], ""));
    assert_eq!(
        (
            analyzed[0]["chi"].clone(),
            analyzed[0]["gamma"].clone(),
            analyzed[0]["psi"].clone()
        ),
        (Value::from(2), Value::from(3), Value::from(4))
    );
}

#[test]
fn construct_rejects_bad_parameters() {
    assert_eq!(
        triad(&["construct", "gstar", "--g", "5", "--h", "4"], "")
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn min_order_and_realize() {
    let v = lines(&triad(
        &["min-order", "--f", "2", "--g", "3", "--h", "4"],
        "",
    ));
    assert_eq!(v[0]["min_order"], 6);
    let out = triad(&["min-order", "--f", "2", "--g", "2", "--h", "4"], "");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(lines(&out)[0]["realizable"], false);

    let out = triad(&["realize", "--f", "3", "--g", "3", "--h", "5"], "");
    assert_eq!(out.status.code(), Some(0));
    let g6 = String::from_utf8_lossy(&out.stdout)
        .lines()
        .next()
        .unwrap()
        .to_owned();
    let a = lines(&triad(&["analyze", &g6], ""));
    assert_eq!(
        (a[0]["n"].as_u64(), a[0]["psi"].as_u64()),
        (Some(8), Some(5))
    );
}

#[test]
fn enumerate_counts_and_gates() {
    let v = lines(&triad(&["enumerate", "--n", "7", "--count"], ""));
    assert_eq!(v[0]["class_count"], 853);
    assert_eq!(
        triad(&["enumerate", "--n", "10", "--count"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        triad(&["enumerate", "--n", "11", "--count", "--extended"], "")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enumerate_h_optimal() {
    let v = lines(&triad(&["enumerate", "--hoptimal", "5"], ""));
    assert_eq!(v.len(), 3);
    for g in &v {
        assert_eq!(g["report"]["psi"], 5);
        assert!(g["graph6"].is_string());
    }
}

#[test]
fn verify_commands() {
    let out = triad(&["verify", "hoptimal", "--h", "4"], "");
    assert_eq!(out.status.code(), Some(0));
    let v = lines(&out);
    assert_eq!(v[0]["expected"]["count"], 7);
    assert_eq!(v[0]["pass"], true);

    let out = triad(&["verify", "hoptimal", "--h", "7"], "");
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(lines(&out)[0]["skipped"], "capacity");

    let out = triad(
        &["verify", "minorder", "--f", "2", "--g", "3", "--h", "4"],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(lines(&out)[0]["computed"], 6);
}

#[test]
fn certify_outcomes() {
    let ok = triad(
        &[
            "certify",
            "C~",
            "--cert",
            r#"{"h_set":[0,1,2],"s_set":[3],"k":3}"#,
        ],
        "",
    );
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(lines(&ok)[0]["implied_lower_bound"], 4);

    let overlap = triad(
        &[
            "certify",
            "C~",
            "--cert",
            r#"{"h_set":[0,1],"s_set":[1],"k":1}"#,
        ],
        "",
    );
    assert_eq!(overlap.status.code(), Some(2));
    assert_eq!(lines(&overlap)[0]["reason"], "not disjoint");

    let bad = triad(&["certify", "C~", "--cert", "{bad"], "");
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(triad(&["bogus"], "").status.code(), Some(1));
    assert_eq!(triad(&["--help"], "").status.code(), Some(0));
}
