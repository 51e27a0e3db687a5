//! End-to-end tests of the binary: exit-code contract, JSON payloads,
//! SVG content, and byte determinism.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hexagrammum"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

const GENERIC: &str = r#"{"A":"0","B":"1","C":"2","D":"3","E":"4","F":"5"}"#;

#[test]
fn pascal_doubled_point_is_the_chord() {
    let out = run(&[
        "pascal",
        "--input",
        r#"{"A":"0","B":"0","C":"1","D":"2","E":"3","F":"5"}"#,
        "--symbol",
        "ABC/FED",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["defined"], true);
    assert_eq!(v["line"], serde_json::json!(["0", "2", "-1"]));
}

#[test]
fn pascal_undefined_on_row_matched_locus() {
    let out = run(&[
        "pascal",
        "--input",
        r#"{"A":"1","B":"2","C":"3","D":"3","E":"2","F":"1"}"#,
        "--symbol",
        "AED/FBC",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["defined"], false);
    assert!(v.get("line").is_none());
}

#[test]
fn malformed_rational_exits_2() {
    let out = run(&[
        "pascal",
        "--input",
        r#"{"A":"3//4","B":"1","C":"2","D":"3","E":"4","F":"5"}"#,
        "--symbol",
        "ABC/FED",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    let out = run(&["pascal", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn all_pascals_counts_sixty() {
    let out = run(&["all-pascals", "--input", GENERIC]);
    let v = stdout_json(&out);
    let pascals = v["pascals"].as_array().unwrap();
    assert_eq!(pascals.len(), 60);
    assert!(pascals.iter().all(|p| p["defined"] == true));
}

#[test]
fn degenerate_triple_point_example() {
    let out = run(&[
        "degenerate",
        "--input",
        r#"{"base":{"A":"3","B":"3","C":"3","D":"1","E":"7","F":"4"},
            "symbol":"ABC/FED","fiber":{"kind":"codim2","coords":["1","1"]}}"#,
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["line"], serde_json::json!(["12", "-7", "1"]));
}

#[test]
fn degenerate_pencil_example() {
    // A=B=C at m=2, fiber parameter 3: the line <-6,1,1> up to sign
    let out = run(&[
        "degenerate",
        "--input",
        r#"{"base":{"A":"2","B":"2","C":"2","D":"-1","E":"0","F":"1"},
            "symbol":"ABC/FED","fiber":{"kind":"codim2","coords":["1","3"]}}"#,
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["line"], serde_json::json!(["6", "-1", "-1"]));
}

#[test]
fn degenerate_marked_point_exits_3() {
    let out = run(&[
        "degenerate",
        "--input",
        r#"{"base":{"A":"1","B":"0","C":"-1","D":"-1","E":"0","F":"1"},
            "symbol":"ABC/FED","fiber":{"kind":"interior222","coords":["0","0","1"]}}"#,
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("L-line"), "stderr: {err}");
}

#[test]
fn classify_222_counts() {
    let out = run(&["classify-222", "--input", r#"{"P":"1","Q":"0","R":"-1"}"#]);
    let v = stdout_json(&out);
    assert_eq!(v["counts"]["constant"], 44);
    assert_eq!(v["counts"]["surjective"], 4);
    assert_eq!(v["entries"].as_array().unwrap().len(), 60);
}

#[test]
fn classify_222_coincident_points_exit_3() {
    let out = run(&["classify-222", "--input", r#"{"P":"1","Q":"1","R":"-1"}"#]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn kirkman_and_steiner_points() {
    let out = run(&["kirkman", "--input", GENERIC]);
    let v = stdout_json(&out);
    let pts = v["kirkman_points"].as_array().unwrap();
    assert_eq!(pts.len(), 60);
    assert!(pts.iter().all(|p| p["defined"] == true));

    let out = run(&["steiner", "--input", GENERIC]);
    let v = stdout_json(&out);
    let pts = v["steiner_points"].as_array().unwrap();
    assert_eq!(pts.len(), 20);
    assert!(pts.iter().all(|p| p["defined"] == true));
}

#[test]
fn tri_symmetric_witness() {
    let out = run(&[
        "tri-symmetric",
        "--input",
        r#"{"A":"0","B":"1","C":"inf","D":"2","E":"1/2","F":"-1"}"#,
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["tri_symmetric"], true);
    assert_eq!(v["alpha"], "2");

    let out = run(&[
        "tri-symmetric",
        "--input",
        r#"{"A":"0","B":"1","C":"inf","D":"5","E":"7","F":"11"}"#,
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["tri_symmetric"], false);
}

#[test]
fn verify_suite_runs_and_unknown_suite_exits_2() {
    let out = run(&[
        "verify",
        "--suite",
        "pedoe",
        "--seed",
        "11",
        "--samples",
        "2",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);

    let out = run(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_byte_deterministic() {
    let a = run(&[
        "verify",
        "--suite",
        "pedoe",
        "--seed",
        "5",
        "--samples",
        "2",
    ]);
    let b = run(&[
        "verify",
        "--suite",
        "pedoe",
        "--seed",
        "5",
        "--samples",
        "2",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn render_sextuple_content_checklist() {
    let out = run(&["render", "--input", GENERIC, "--symbol", "ABC/FED"]);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"class="conic-point""#).count(), 6);
    assert_eq!(svg.matches(r#"class="crosshair""#).count(), 3);
    assert_eq!(svg.matches(r#"class="pascal""#).count(), 1);
    for label in ["A", "B", "C", "D", "E", "F"] {
        assert!(svg.contains(&format!(">{label}</text>")));
    }
}

#[test]
fn render_triangle_content_checklist() {
    let out = run(&["render", "--input", r#"{"P":"2","Q":"1/3","R":"-1"}"#]);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(svg.matches(r#"class="conic-point""#).count(), 3);
    assert_eq!(svg.matches(r#"class="pole""#).count(), 3);
    assert_eq!(svg.matches(r#"class="polar-triangle""#).count(), 3);
    assert_eq!(svg.matches(r#"class="perspector""#).count(), 1);
    assert_eq!(svg.matches(r#"class="ch-line""#).count(), 1);
    assert!(svg.contains(">CH</text>"));
}

#[test]
fn render_is_byte_deterministic() {
    let args = [
        "render",
        "--input",
        GENERIC,
        "--symbol",
        "AED/FBC",
        "--kirkman",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reads_input_from_file_and_stdin() {
    use std::io::Write;
    let dir = std::env::temp_dir().join("hexagrammum-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sextuple.json");
    std::fs::write(&path, GENERIC).unwrap();
    let out = run(&[
        "pascal",
        "--input",
        path.to_str().unwrap(),
        "--symbol",
        "ABC/FED",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["defined"], true);

    let mut child = bin()
        .args(["pascal", "--input", "-", "--symbol", "ABC/FED"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(GENERIC.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("hexagrammum-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.svg");
    let out = run(&[
        "render",
        "--input",
        GENERIC,
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
}

#[test]
fn json_wire_formats_round_trip() {
    // sextuple
    let h: hexagrammum::Sextuple = serde_json::from_str(GENERIC).unwrap();
    let back: hexagrammum::Sextuple =
        serde_json::from_str(&serde_json::to_string(&h).unwrap()).unwrap();
    assert_eq!(back, h);
    // symbol
    let s: hexagrammum::PascalSymbol = serde_json::from_str("\"AED/FBC\"").unwrap();
    let back: hexagrammum::PascalSymbol =
        serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(back, s);
    // degeneration spec
    let spec_json = r#"{"base":{"A":"1","B":"0","C":"-1","D":"-1","E":"0","F":"1"},
        "symbol":"ACD/FBE","fiber":{"kind":"lline222","marked":"BE.CD","coords":["1","2"]}}"#;
    let spec: hexagrammum::DegenerationSpec = serde_json::from_str(spec_json).unwrap();
    let back: hexagrammum::DegenerationSpec =
        serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
    assert_eq!(back, spec);
    // suite report, through the binary
    let out = run(&["verify", "--suite", "prop-2-2"]);
    let v = stdout_json(&out);
    let reports: Vec<hexagrammum::verify::SuiteReport> =
        serde_json::from_value(v["reports"].clone()).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].passed());
}

#[test]
fn text_format_output() {
    let out = run(&[
        "pascal", "--input", GENERIC, "--symbol", "ABC/FED", "--format", "text",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("defined: true"));
    assert!(text.contains("line:"));
}
