use std::io::Write;
use std::process::{Command, Output, Stdio};

fn finmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finmod")).args(args).output().unwrap()
}

fn json_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn classify_z4_over_the_integers() {
    let out = finmod(&["classify", "module zabelian 4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json_lines(&out)[0];
    assert_eq!(r["version"], 1);
    assert_eq!(r["verdicts"]["goldie_rickart"], true);
    assert_eq!(r["verdicts"]["rickart"], false);
    assert!(r.get("witnesses").is_none());
}

#[test]
fn witnesses_flag_serializes_the_endomorphism() {
    let out = finmod(&["classify", "--witnesses", "module zabelian 4"]);
    let r = &json_lines(&out)[0];
    let w = &r["witnesses"]["rickart"];
    assert_eq!(w["kind"], "endomorphism");
    assert_eq!(w["map"], serde_json::json!([0, 2, 0, 2]));
    assert_eq!(w["submodule"], serde_json::json!([0, 2]));
}

#[test]
fn zero_module_is_all_true() {
    let out = finmod(&["classify", "module zabelian"]);
    let r = &json_lines(&out)[0];
    let verdicts = r["verdicts"].as_object().unwrap();
    assert!(verdicts.values().all(|v| v == true));
}

#[test]
fn crlf_spec_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_finmod"))
        .arg("classify")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"module regular\r\n  (ring triangular upper 2 (ring zmod 2))\r\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["facts"]["order"], 8);
}

#[test]
fn ring_specs_report_both_sides() {
    let out = finmod(&["classify", "ring zmod 4"]);
    let r = &json_lines(&out)[0];
    assert_eq!(r["predicates"]["right_goldie_rickart"], true);
    assert_eq!(r["predicates"]["right_rickart"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(finmod(&["classify", "module zabelian 4 ("]).status.code(), Some(2));
    assert_eq!(finmod(&["classify", "ring zmod 0"]).status.code(), Some(2));
    assert_eq!(finmod(&["classify", "--max-order", "8", "module zabelian 4 4"]).status.code(), Some(3));
    assert_eq!(finmod(&["search", "rickart&!nonsense"]).status.code(), Some(2));
    assert_eq!(finmod(&["theorems", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(finmod(&["bogus"]).status.code(), Some(2));
    assert_eq!(finmod(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_name_line_and_column() {
    let out = finmod(&["classify", "module regular\n(ring zmod x)"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn search_over_the_integer_family() {
    let out = finmod(&["search", "goldie_rickart&!rickart", "--family", "zabelian"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    let last = lines.last().unwrap();
    assert_eq!(last["record"], "result");
    assert_eq!(last["outcome"], "witness");
    assert_eq!(last["witness"]["spec"], "module zabelian 4");
    assert!(lines.iter().all(|l| l["version"] == 1));
}

#[test]
fn search_over_an_empty_family_is_exhausted() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("empty.toml");
    std::fs::write(
        &cfg,
        "[[family]]\nname = \"empty\"\nring = \"ring zmod 4\"\nrecipe = { cyclics = false, max_summands = 0, closure = false }\n",
    )
    .unwrap();
    let out = finmod(&["search", "rickart", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    let last = lines.last().unwrap();
    assert_eq!(last["outcome"], "exhausted");
    assert_eq!(last["examined"], 0);
}

#[test]
fn theorems_write_json_lines_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let out = finmod(&[
        "theorems",
        "--family",
        "zmod4",
        "--jobs",
        "2",
        "--out",
        path.to_str().unwrap(),
        "--only",
        "goldie-decomposition",
        "--only",
        "injective-hull",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["id"], "goldie-decomposition");
    assert_eq!(lines[0]["status"], "PASS");
    assert_eq!(lines[1]["status"], "SKIPPED");
    assert_eq!(lines[1]["note"], "injective hulls out of scope");
}

#[test]
fn theorem_runs_are_byte_identical() {
    let a = finmod(&["theorems", "--family", "zmod4", "--family", "f2"]);
    let b = finmod(&["theorems", "--family", "zmod4", "--family", "f2", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn oracles_and_catalog() {
    let out = finmod(&["oracles", "--family", "zmod4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json_lines(&out).iter().all(|c| c["disagreement"].is_null()));
    let out = finmod(&["catalog", "--family", "zmod4"]);
    let m = &json_lines(&out)[0];
    assert_eq!(m["record"], "manifest");
    assert_eq!(m["family"], "zmod4");
}
