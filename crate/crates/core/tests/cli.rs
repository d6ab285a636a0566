use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn problem(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/problems").join(name)
}

fn gradus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradus")).args(args).output().expect("binary runs")
}

fn run_file(path: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["run", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    gradus(&args)
}

fn temp_problem(tag: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("gradus-cli-{}-{tag}.gr", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

fn field<'a>(stdout: &'a str, command: &str, key: &str) -> Option<&'a str> {
    stdout.lines().find_map(|l| {
        let mut parts = l.splitn(3, '\t');
        (parts.next() == Some(command) && parts.next() == Some(key)).then(|| parts.next()).flatten()
    })
}

#[test]
fn truncation_reports_known_values() {
    let out = run_file(&problem("truncation.gr"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(field(&s, "dim", "dim"), Some("1"));
    assert_eq!(field(&s, "degree", "degree"), Some("1"));
    assert_eq!(field(&s, "gsop seed=1", "elements"), Some("[y]"));
    assert_eq!(field(&s, "samuel I=p nmax=6", "table"), Some("1:2 2:4 3:6 4:8 5:10 6:12"));
    assert_eq!(field(&s, "samuel I=p nmax=6", "e"), Some("2"));
    assert_eq!(field(&s, "koszul xs=p", "chi"), Some("2"));
    assert_eq!(field(&s, "decompose", "top_components"), Some("{x}:2*1/2"));
    assert!(s.lines().filter(|l| l.starts_with("verify all\t") && l.contains("\tpass: ")).count() == 5);
}

#[test]
fn output_is_deterministic() {
    for name in ["truncation.gr", "crossing_lines.gr", "twisted_pair.gr"] {
        let a = run_file(&problem(name), &["--seed", "9"]);
        let b = run_file(&problem(name), &["--seed", "9"]);
        assert_eq!(a.stdout, b.stdout, "{name}");
        assert_eq!(a.status.code(), Some(0), "{name}");
    }
}

#[test]
fn zero_module_has_dimension_minus_infinity() {
    let out = run_file(&problem("zero_module.gr"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(field(&s, "dim", "dim"), Some("-inf"));
    assert_eq!(field(&s, "hilbert", "dims"), Some("0: 0 0 0 0 0 0 0 0 0 0"));
}

#[test]
fn json_output_parses() {
    let out = run_file(&problem("crossing_lines.gr"), &["--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 9);
    assert!(reports.iter().all(|r| r["status"] == "ok"));
    let degree = reports.iter().find(|r| r["command"] == "degree").unwrap();
    assert_eq!(degree["fields"][0]["key"], "degree");
    assert_eq!(degree["fields"][0]["value"], "2");
}

#[test]
fn parse_error_exits_with_two_and_position() {
    let path = temp_problem("bad", "ring x:1 y:2\nmodule shifts 0\nrel x + y\n");
    let out = run_file(&path, &[]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3, column 5"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn failing_command_exits_with_one() {
    let text = "ring x:1 y:1\nmodule shifts 0\nideal p = x\ncmd dim\ncmd samuel I=p\n";
    let path = temp_problem("fail", text);
    let out = run_file(&path, &[]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(1));
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(field(&s, "dim", "dim"), Some("2"));
    assert_eq!(field(&s, "samuel I=p", "status"), Some("error"));
}

#[test]
fn missing_file_is_reported() {
    let out = gradus(&["run", "/nonexistent/problem.gr"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
