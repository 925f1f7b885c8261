use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tangent_sections::section::SectionReport;

fn tansec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tansec"))
        .args(args)
        .env_remove("TANSEC_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("tansec-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, body: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn classify_smooth_diagonal() {
    let dir = Scratch::new("smooth");
    let m = dir.file(
        "a.json",
        r#"{"n": 2, "entries": [["1","0","0"],["0","2","0"],["0","0","3"]]}"#,
    );
    let out = tansec(&["classify", "--matrix", &m, "--n", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["smooth"], Value::Bool(true));
    assert_eq!(v["degree"], serde_json::json!(6));
    let report: SectionReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), v);
}

#[test]
fn classify_reducible_and_errors() {
    let dir = Scratch::new("reducible");
    let j1 = dir.file("j1.json", r#"{"entries": [[1,0,0],[0,0,0],[0,0,0]]}"#);
    let out = tansec(&["classify", "--matrix", &j1, "--n", "2"]);
    let v = json(&out);
    assert_eq!(v["reducible"], Value::Bool(true));
    assert_eq!(v["kind"], Value::String("diagonalizable".into()));

    let out = tansec(&["classify", "--matrix", &j1, "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n >= 2"));

    let scalar = dir.file(
        "s.json",
        r#"{"entries": [["3","0","0"],["0","3","0"],["0","0","3"]]}"#,
    );
    let out = tansec(&["classify", "--matrix", &scalar, "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("scalar"));

    let float = dir.file("f.json", r#"{"entries": [[0.5,0,0],[0,1,0],[0,0,2]]}"#);
    assert_eq!(
        tansec(&["classify", "--matrix", &float, "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tansec(&["classify", "--matrix", "/nonexistent.json", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn chow_examples() {
    let out = tansec(&["chow", "--n", "3", "--expr", "z^4"]);
    assert_eq!(json(&out)["intersection_number"], serde_json::json!(20));

    let v = json(&tansec(&["chow", "--n", "2", "--expr", "E0*E0"]));
    assert_eq!(v["normal_form"], Value::String("-1 * a^2".into()));
    assert_eq!(v["intersection_number"], serde_json::json!(-1));
    assert_eq!(v["symbols"]["z"], Value::String("zeta".into()));

    let v = json(&tansec(&["chow", "--n", "2", "--expr", "E0*a"]));
    assert_eq!(v["normal_form"], Value::String("0".into()));

    let v = json(&tansec(&["chow", "--n", "3", "--expr", "z*a"]));
    assert_eq!(v["intersection_number"], Value::Null);
    assert_eq!(v["degree"], serde_json::json!(2));
}

#[test]
fn chow_syntax_error_points_at_offender() {
    let out = tansec(&["chow", "--n", "2", "--expr", "z + * a"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("position 4"), "{err}");
    assert!(err.contains("\n      ^"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_small_catalog() {
    let dir = Scratch::new("verify");
    let cat = dir.file(
        "cat.json",
        r#"[
            {"q": 5, "blocks": [{"eigenvalue": 0, "size": 2}, {"eigenvalue": 1, "size": 1}]},
            {"name": "non-split", "q": 3, "matrix": [[0, 2, 0], [1, 0, 0], [0, 0, 0]]},
            {"q": 3, "blocks": [{"eigenvalue": 0, "size": 2}, {"eigenvalue": 0, "size": 1}]}
        ]"#,
    );
    let out = tansec(&["verify", "--catalog", &cat, "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(
        v["summary"],
        serde_json::json!({"passed": 2, "failed": 0, "skipped": 1})
    );
    assert_eq!(v["checks"][1]["status"], Value::String("skipped".into()));
    assert_eq!(
        v["checks"][1]["reason"],
        Value::String("does not split over F_3".into())
    );
    assert_eq!(v["all_passed"], Value::Bool(true));
    assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);
    assert!(v.get("elapsed_ms").is_none());
    assert!(stderr(&out).contains("skipped: does not split over F_3"));

    let again = tansec(&["verify", "--catalog", &cat, "--seed", "3"]);
    assert_eq!(out.stdout, again.stdout);

    let out = tansec(&["verify", "--catalog", &cat, "--q-max", "3"]);
    assert_eq!(json(&out)["summary"]["skipped"], serde_json::json!(2));
}

#[test]
fn verify_input_errors() {
    let dir = Scratch::new("verify-errors");
    let empty = dir.file("empty.json", "[]");
    assert_eq!(
        tansec(&["verify", "--catalog", &empty]).status.code(),
        Some(2)
    );
    let broken = dir.file("broken.json", "[{");
    assert_eq!(
        tansec(&["verify", "--catalog", &broken]).status.code(),
        Some(2)
    );
    assert_eq!(
        tansec(&["verify", "--catalog", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn worker_count_from_environment() {
    let dir = Scratch::new("workers");
    let cat = dir.file(
        "cat.json",
        r#"[{"q": 3, "blocks": [{"eigenvalue": 0, "size": 2}, {"eigenvalue": 1, "size": 1}]}]"#,
    );
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_tansec"))
            .args(["verify", "--catalog", &cat])
            .env("TANSEC_WORKERS", workers)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run("zero").status.code(), Some(2));
}

#[test]
fn chart_and_dual() {
    let dir = Scratch::new("chart");
    let m = dir.file("d.json", r#"{"entries": [[0,0,0],[0,1,0],[0,0,2]]}"#);
    let v = json(&tansec(&[
        "chart", "--matrix", &m, "--n", "2", "--i", "0", "--j", "1",
    ]));
    assert_eq!(v["degree"], serde_json::json!(2));
    assert_eq!(v["variables"].as_array().unwrap().len(), 3);
    assert_eq!(
        tansec(&["chart", "--matrix", &m, "--n", "2", "--i", "1", "--j", "1"])
            .status
            .code(),
        Some(2)
    );

    assert_eq!(
        json(&tansec(&["dual", "--matrix", &m]))["dual_member"],
        Value::Bool(false)
    );
    let sing = dir.file(
        "s.json",
        r#"{"q": 7, "entries": [[0,1,0],[0,0,0],[0,0,1]]}"#,
    );
    assert_eq!(
        json(&tansec(&["dual", "--matrix", &sing]))["dual_member"],
        Value::Bool(true)
    );
}
