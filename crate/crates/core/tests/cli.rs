use std::path::Path;
use std::process::{Command, Output};

fn octoclif(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octoclif")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    octoclif(args).status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn octonion_table_text_lists_products() {
    let out = octoclif(&["table"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().find(|l| l.trim_start().starts_with("e1 ")).unwrap();
    let cells: Vec<&str> = row.split_whitespace().filter(|c| *c != "|").collect();
    assert_eq!(cells, ["e1", "-1", "e4", "e5", "-e2", "-e3", "-e7", "e6"]);
}

#[test]
fn table_json_and_csv_formats() {
    let out = octoclif(&["table", "--algebra", "clifford", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 2);
    let out = octoclif(&["table", "--algebra", "cayley-dickson", "--n", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 5);
}

#[test]
fn verify_algebra_suites_exit_zero() {
    for suite in ["moufang", "composition", "zero-divisors", "pseudo-norm", "associativity"] {
        assert_eq!(code(&["verify-algebra", "--suite", suite, "--trials", "200"]), 0, "{suite}");
    }
    let out = octoclif(&["verify-algebra", "--suite", "composition", "--trials", "100", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_ok"], true);
}

#[test]
fn analyze_exit_codes_follow_verdicts() {
    assert_eq!(code(&["analyze", "--map", "oct-inversion", "--samples", "20"]), 0);
    assert_eq!(code(&["analyze", "--map", "stretch", "--samples", "20"]), 1);
    assert_eq!(code(&["analyze", "--map", "no-such-map"]), 2);
    assert_eq!(code(&["analyze", "--map", "oct-linear", "--algebra", "clifford"]), 2);
    assert_eq!(code(&["analyze"]), 2);
    assert_eq!(code(&["analyze", "--map", "oct-linear", "--box", "1:0"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
}

#[test]
fn analyze_writes_json_and_csv_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let j = json.to_str().unwrap();
    let c = csv.to_str().unwrap();
    assert_eq!(code(&["analyze", "--map", "cl-rotation", "--n", "4", "--samples", "10", "--out", j]), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["points"].as_array().unwrap().len(), 10);
    assert_eq!(v["summary"]["frame_class"], "constant");
    assert_eq!(code(&["analyze", "--map", "cl-rotation", "--samples", "10", "--format", "csv", "--out", c]), 0);
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 11);
}

#[test]
fn frame_at_degenerate_point_exits_three() {
    assert_eq!(code(&["frame", "--map", "oct-inversion", "--point", "1,1,0,0,0,0,0,0"]), 0);
    assert_eq!(code(&["frame", "--map", "cl-inversion", "--point", "0,0,0,0"]), 3);
    assert_eq!(code(&["frame", "--map", "oct-inversion", "--point", "1,2"]), 2);
}

#[test]
fn config_files_drive_analysis() {
    let dir = tempfile::tempdir().unwrap();
    let word = write(
        dir.path(),
        "word.json",
        r#"[{"name": "shift-invert", "algebra": "clifford", "n": 2,
             "word": [{"op": "translate", "w": [1, 0, 0]}, {"op": "inversion"}]},
            {"name": "scaled", "algebra": "octonion", "word": [{"op": "dilate", "t": 3}]}]"#,
    );
    assert_eq!(code(&["analyze", "--config", &word, "--map", "shift-invert", "--samples", "10"]), 0);
    assert_eq!(code(&["analyze", "--config", &word, "--map", "scaled", "--samples", "10"]), 0);
    // Several maps without --map is ambiguous.
    assert_eq!(code(&["analyze", "--config", &word, "--samples", "10"]), 2);

    let raw = write(
        dir.path(),
        "raw.json",
        r#"{"name": "affine", "algebra": "octonion",
            "a": [2,0,0,0,0,0,0,0], "b": [0,1,0,0,0,0,0,0],
            "c": [0,0,0,0,0,0,0,0], "d": [1,0,0,0,0,0,0,0]}"#,
    );
    let out = octoclif(&["analyze", "--config", &raw, "--samples", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["map_label"], "affine");

    let broken = write(dir.path(), "broken.json", r#"{"name": "x", "algebra": "octonion", "bogus": 1}"#);
    assert_eq!(code(&["analyze", "--config", &broken]), 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&["analyze", "--config", missing.to_str().unwrap()]), 2);
}

#[test]
fn catalog_lists_all_maps() {
    let out = octoclif(&["catalog"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 10);
}
