use std::io::Write;
use std::process::{Command, Output};

use hopf_core::classify::{CaseReport, StructureJson, StructureRecord};
use hopf_core::hopf::SurfaceSpec;
use hopf_core::sections::SectionFamily;
use serde_json::Value;

const GENERIC: &str = r#"{"type":"diagonal","eigenvalues":[[1,2,0,1],[1,3,0,1]]}"#;
const HYPER: &str = r#"{"type":"diagonal","eigenvalues":[[1,4,0,1],[1,2,0,1]]}"#;
const EXCEPTIONAL_2: &str = r#"{"type":"exceptional","eigenvalue":[1,2,0,1],"m":2}"#;

fn spec_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args(args)
        .output()
        .unwrap()
}

fn run_spec(cmd: &str, body: &str, extra: &[&str]) -> (i32, Value, String) {
    let f = spec_file(body);
    let mut args = vec![cmd, "--spec", f.path().to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = run(&args);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (
        out.status.code().unwrap(),
        json,
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn structures_of(v: &Value) -> Vec<StructureJson> {
    serde_json::from_value(v["structures"].clone()).unwrap()
}

#[test]
fn classify_examples() {
    let (code, v, _) = run_spec(
        "classify",
        &format!(
            r#"{{"surface":{}}}"#,
            r#"{"type":"diagonal","eigenvalues":[[1,2,0,1],[1,4,0,1]]}"#
        ),
        &[],
    );
    assert_eq!(code, 0);
    assert_eq!(
        (v["kind"].as_str(), v["m1"].as_u64(), v["m2"].as_u64()),
        (Some("hyperresonant"), Some(2), Some(1))
    );
    let (code, v, _) = run_spec(
        "classify",
        r#"{"surface":{"type":"exceptional","eigenvalue":[1,2,0,1],"m":3}}"#,
        &[],
    );
    assert_eq!(code, 0);
    assert_eq!(
        (v["kind"].as_str(), v["m"].as_u64()),
        (Some("exceptional"), Some(3))
    );
}

#[test]
fn malformed_input_exits_two() {
    let (code, _, err) = run_spec("classify", "{\n  \"surface\": {\"type\": \"diag\"}\n}", &[]);
    assert_eq!(code, 2);
    assert!(
        err.contains(":2:"),
        "diagnostic should carry the line: {}",
        err
    );
    let (code, _, err) = run_spec(
        "classify",
        r#"{"surface":{"type":"diagonal","eigenvalues":[[2,1,0,1],[1,2,0,1]]}}"#,
        &[],
    );
    assert_eq!(code, 2, "{}", err);
    let (code, _, _) = run_spec("structures", &format!(r#"{{"surface":{}}}"#, GENERIC), &[]);
    assert_eq!(code, 2, "missing n");
    let (code, _, _) = run_spec(
        "structures",
        &format!(r#"{{"surface":{},"n":1,"extra":0}}"#, GENERIC),
        &[],
    );
    assert_eq!(code, 2, "unknown field");
    assert_eq!(run(&["cases", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn structures_round_trip() {
    let body = format!(r#"{{"surface":{},"n":1}}"#, GENERIC);
    let (code, v, _) = run_spec("structures", &body, &[]);
    assert_eq!(code, 0);
    let recs = structures_of(&v);
    assert_eq!(recs.len(), 3);
    let s = serde_json::from_str::<SurfaceSpec>(GENERIC)
        .unwrap()
        .build()
        .unwrap();
    for j in &recs {
        let back = StructureRecord::from_json(&s, j).unwrap();
        assert_eq!(&back.to_json(), j);
    }
    let (_, again, _) = run_spec("structures", &body, &[]);
    assert_eq!(v, again, "output is deterministic");
}

#[test]
fn exceptional_below_degree_warns() {
    let (code, v, err) = run_spec(
        "structures",
        &format!(r#"{{"surface":{},"n":1}}"#, EXCEPTIONAL_2),
        &[],
    );
    assert_eq!(code, 0);
    assert!(structures_of(&v).is_empty());
    assert!(err.contains("n < m"));
    assert!(v["warning"].as_str().unwrap().starts_with("n < m"));
}

#[test]
fn hyperresonant_records_with_params() {
    let body = format!(r#"{{"surface":{},"n":2}}"#, HYPER);
    let (code, v, _) = run_spec(
        "structures",
        &body,
        &["--params", "[[[1,1,0,1]],[[1,1,0,1],[3,1,0,1]]]"],
    );
    assert_eq!(code, 0);
    let recs = structures_of(&v);
    let hyper = recs
        .iter()
        .filter(|r| r.provenance.starts_with("hyperresonant"))
        .count();
    assert!(
        hyper >= 2,
        "{:?}",
        recs.iter().map(|r| &r.provenance).collect::<Vec<_>>()
    );
    let (code, _, _) = run_spec("structures", &body, &["--params", "[[[0,1,0,1]]]"]);
    assert_eq!(code, 2, "zero parameter is rejected");
}

#[test]
fn verify_exit_status() {
    let (code, v, _) = run_spec(
        "verify",
        &format!(r#"{{"surface":{},"n":2}}"#, GENERIC),
        &["--deg-bound", "2", "--samples", "50"],
    );
    assert_eq!(code, 0, "{}", v);
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["completeness"]["passed"], Value::Bool(true));
    // Hyperresonant developing maps are equivariant but branched along the root curves.
    let (code, v, _) = run_spec(
        "verify",
        &format!(r#"{{"surface":{},"n":2}}"#, HYPER),
        &["--samples", "50"],
    );
    assert_eq!(code, 1);
    for s in v["structures"].as_array().unwrap() {
        assert_eq!(s["equivariance"]["passed"], Value::Bool(true));
    }
}

#[test]
fn cases_table() {
    let out = run(&["cases", "--n", "1", "--m1", "1", "--m2", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let table = v["table"].as_array().unwrap().len();
    let report: CaseReport = serde_json::from_value(v).unwrap();
    assert_eq!(report.rows.len(), 6);
    assert_eq!(table, 6);
    assert_eq!(report.rows.iter().filter(|r| !r.feasible).count(), 2);
    let json = serde_json::to_string(&report).unwrap();
    assert_eq!(serde_json::from_str::<CaseReport>(&json).unwrap(), report);
}

#[test]
fn normal_form_of_jordan_element() {
    let body = r#"{"n":2,"element":{"g":[[[2,1,0,1],[1,1,0,1]],[[0,1,0,1],[2,1,0,1]]],"p":[[1,1,0,1],[3,1,0,1],[5,1,0,1]]}}"#;
    let (code, v, _) = run_spec("normal-form", body, &[]);
    assert_eq!(code, 0);
    assert_eq!(v["normal_form"]["g"], v["input"]["g"]);
    assert!(v["normal_form"]["p"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c[0] == 0));
    // Unipotent case keeps only the Z₁ⁿ coefficient, normalized to 1.
    let body = r#"{"n":2,"element":{"g":[[[1,1,0,1],[3,1,0,1]],[[0,1,0,1],[1,1,0,1]]],"p":[[1,1,0,1],[3,1,0,1],[5,1,0,1]]}}"#;
    let (code, v, _) = run_spec("normal-form", body, &[]);
    assert_eq!(code, 0);
    let p: Vec<i64> = v["normal_form"]["p"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c[0].as_i64().unwrap())
        .collect();
    assert_eq!(p, vec![0, 0, 1]);
}

#[test]
fn sections_jordan_family() {
    let body = format!(
        r#"{{"surface":{},"bundle":{{"projective":[[[3,1,0,1],[1,1,0,1]],[[0,1,0,1],[3,1,0,1]]]}}}}"#,
        EXCEPTIONAL_2
    );
    let (code, v, _) = run_spec("sections", &body, &["--verify", "--samples", "30"]);
    assert_eq!(code, 0);
    let fam: SectionFamily = serde_json::from_value(v["family"].clone()).unwrap();
    assert_eq!(v["family"]["kind"]["variant"], "jordan_family");
    assert!(fam.includes_infinity);
    assert_eq!(v["verification"]["passed"], Value::Bool(true));
}

#[test]
fn text_output() {
    let out = run(&["cases", "--json", "false"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().filter(|l| l.ends_with("[impossible]")).count(),
        2
    );
}

#[test]
fn shipped_specs_run() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/specs/");
    let cases = [
        ("classify", "generic.json", 0),
        ("verify", "generic.json", 0),
        ("verify", "hyperresonant.json", 1),
        ("structures", "exceptional.json", 0),
        ("normal-form", "jordan_element.json", 0),
        ("sections", "jordan_bundle.json", 0),
        ("sections", "line_bundle.json", 0),
    ];
    for (cmd, file, code) in cases {
        let path = format!("{}{}", dir, file);
        let out = run(&[cmd, "--spec", &path]);
        assert_eq!(out.status.code(), Some(code), "{} {}", cmd, file);
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(v.is_object(), "{} {}", cmd, file);
    }
}
