use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn lss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lss"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lss_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = lss(&full);
    let v = serde_json::from_slice(&out.stdout).expect("JSON output");
    (out.status.code().unwrap(), v)
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

#[test]
fn validate_reports_kind() {
    let (code, v) = lss_json(&["validate", &path("b2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "frame-pair");
    assert_eq!(v["instance"]["designated"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn validate_names_offending_pair() {
    let out = lss(&["validate", &path("bad.json")]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("NotUnionClosed"), "{err}");
    assert!(err.contains("{1} and {2}"), "{err}");
}

#[test]
fn syntax_errors_have_positions() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "{{\n  \"size\": 2,\n  \"leq\": [[true, false]\n").unwrap();
    let out = lss(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn missing_file_is_an_error() {
    assert_eq!(lss(&["validate", "/nonexistent/x.json"]).status.code(), Some(2));
}

#[test]
fn spectrum_of_b2() {
    let (code, v) = lss_json(&["spectrum", &path("b2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["primes"], serde_json::json!(["x", "y"]));
    assert_eq!(v["delta"][1], serde_json::json!({"element": "x", "primes": ["y"]}));
    assert_eq!(v["topology"]["opens"].as_array().unwrap().len(), 4);
}

#[test]
fn roundtrip_b2_passes() {
    let (code, v) = lss_json(&["roundtrip", &path("b2.json")]);
    assert_eq!(code, 0);
    assert!(v["reports"][0]["laws"].as_array().unwrap().iter().all(|l| l["pass"] == true));
}

#[test]
fn roundtrip_needs_sobriety() {
    let (code, v) = lss_json(&["roundtrip", &path("indiscrete2.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["reports"][0]["laws"][0]["pass"], false);
}

#[test]
fn adjunction_on_morphisms() {
    for f in ["collapse.json", "b2_to_chain2.json", "sierpinski.json", "chain3.json"] {
        let (code, v) = lss_json(&["adjunction", &path(f)]);
        assert_eq!(code, 0, "{f}: {v}");
    }
}

#[test]
fn classify_space_map_with_witness() {
    let (code, v) = lss_json(&["classify-map", &path("discontinuous.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["bounded"], true);
    assert_eq!(v["continuous"], false);
    assert_eq!(v["witnesses"]["continuous"]["target_smop"], serde_json::json!(["open"]));
}

#[test]
fn classify_catalog_map() {
    let (code, v) = lss_json(&["classify-map", &path("sin.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["classification"]["bounded"], true);
    assert_eq!(v["verdict"]["compatible"], false);
}

#[test]
fn omega_and_sigma_emit_instances() {
    let (code, v) = lss_json(&["omega", &path("sierpinski.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "frame-pair");
    assert_eq!(v["size"], 3);
    let (code, v) = lss_json(&["sigma", &path("chain3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "space");
    assert_eq!(v["carrier"], serde_json::json!(["0", "a"]));
}

#[test]
fn sigma_output_feeds_back_in() {
    let out = lss(&["--format", "json", "sigma", &path("b2.json")]);
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(&out.stdout).unwrap();
    let (code, v) = lss_json(&["roundtrip", f.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn hl_suite_modes() {
    let (code, v) = lss_json(&["hl-suite", "--exhaustive", "3", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"].as_array().unwrap().len(), 1 + 3 + 19 + 1 + 1 + 3 + 19);
    let (code, a) = lss_json(&["hl-suite", "--seed", "5", "--count", "6"]);
    assert_eq!(code, 0);
    let (_, b) = lss_json(&["hl-suite", "--seed", "5", "--count", "6"]);
    assert_eq!(a, b);
    assert_eq!(lss(&["hl-suite"]).status.code(), Some(2));
}

#[test]
fn realline_table_rows() {
    let (code, v) = lss_json(&["realline-table"]);
    assert_eq!(code, 0);
    let rows: Vec<(String, bool, bool)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["map"].as_str().unwrap().to_string(),
                r["dominating"].as_bool().unwrap(),
                r["compatible"].as_bool().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        rows,
        vec![
            ("-id".into(), false, true),
            ("sin".into(), true, false),
            ("arctan".into(), true, true),
            ("1/exp".into(), false, true),
        ]
    );
    let text = String::from_utf8(lss(&["realline-table"]).stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("map"));
}
