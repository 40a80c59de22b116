//! End-to-end tests of the binary: reference outputs, the exit-code
//! contract, and conformance of every JSON payload to the committed
//! schema.

use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_poissonval"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json_ok(args: &[&str]) -> Value {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    serde_json::from_str(stdout.trim()).expect("stdout is JSON")
}

fn schema_validator() -> jsonschema::Validator {
    let raw = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/schemas/report.schema.json"
    ))
    .expect("schema file is committed");
    let schema: Value = serde_json::from_str(&raw).expect("schema is JSON");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

#[test]
fn bracket_matches_the_reference_formula() {
    let (code, stdout, _) = run(&[
        "bracket",
        "--potential",
        "x^3+y^3+z^3+1*x*y*z",
        "--f",
        "x",
        "--g",
        "y",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "3*z^2 + x*y");
}

#[test]
fn milnor_payload_matches_the_reference() {
    let payload = json_ok(&["milnor", "--potential", "x^5+y^5+z^5", "--json"]);
    assert_eq!(payload, json!({"milnor": 64, "isolated": true}));
}

#[test]
fn fiber_enumeration_payload_is_byte_exact() {
    let (code, stdout, _) = run(&[
        "aut-enumerate",
        "--fermat",
        "5",
        "--variant",
        "fiber",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), r#"{"order":75,"quotient":"C3","split":true}"#);
}

#[test]
fn usage_errors_exit_2_and_print_the_grammar() {
    let (code, _, stderr) = run(&["bracket", "--potential", "x^3 + q", "--f", "x", "--g", "y"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown variable"));
    assert!(stderr.contains("polynomial grammar"));

    let (code, _, stderr) = run(&["bracket", "--potential", "x^3 + ", "--f", "x", "--g", "y"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unexpected end of input"));

    let (code, _, _) = run(&["no-such-subcommand"]);
    assert_eq!(code, 2);

    let (code, _, _) = run(&["wmin"]);
    assert_eq!(code, 2);

    let (code, _, _) = run(&["aut-enumerate", "--fermat", "5", "--variant", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn domain_errors_exit_1_and_report_structurally() {
    let (code, _, stderr) = run(&["singularity", "--potential", "x^2 + y^3 + z^3"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("error:"));

    let (code, stdout, _) = run(&["singularity", "--potential", "x^2 + y^3 + z^3", "--json"]);
    assert_eq!(code, 1);
    let payload: Value = serde_json::from_str(stdout.trim()).unwrap();
    assert!(payload.get("error").is_some());
    assert!(schema_validator().is_valid(&payload));

    // a zero denominator is a domain error, not a crash
    let (code, _, stderr) = run(&[
        "value",
        "--vars",
        "x,y",
        "--weights",
        "1,1",
        "--f",
        "x",
        "--den",
        "0",
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("denominator"));
}

#[test]
fn every_json_payload_validates_against_the_committed_schema() {
    let validator = schema_validator();
    let battery: &[&[&str]] = &[
        &["bracket", "--potential", "x^3+y^3+z^3", "--f", "x*y", "--g", "z"],
        &["jacobi", "--potential", "x^3+y^3+z^3+2*x*y*z", "--samples", "3"],
        &["potential-structure", "--potential", "x^3+y^3+z^3+1*x*y*z"],
        &["nf", "--modulus", "x^3+y^3+z^3-1", "--f", "z^4*x"],
        &["singularity", "--potential", "x^3+y^3+z^3"],
        &["milnor", "--potential", "x^3+y^3+z^3+-3*x*y*z"],
        &["syzygy", "--potential", "x*y*z"],
        &["syzygy", "--potential", "x^4+y^4+z^4"],
        &["value", "--weights", "1,2,3", "--f", "x^2+y*z", "--den", "z"],
        &["value", "--weights", "1,1", "--vars", "x,y", "--f", "0"],
        &["value", "--weights", "1,-1", "--vars", "u,v", "--laurent", "--f", "u^-2*v"],
        &["wmin", "--family", "nu-xi", "--xi", "1", "--w", "-1"],
        &["wmin", "--family", "torus", "--q", "2", "--v", "1,2"],
        &["wmin", "--potential", "x^3+y^3+z^3", "--weights", "1,1,1"],
        &["classify-point", "--weyl", "--point", "0,0"],
        &["nu-xi", "--xi", "2", "--w", "0", "--f", "y^3"],
        &["gadic", "--g", "x+y", "--f", "x^2+2*x*y+y^2"],
        &["aut-check", "--potential", "x^4+y^4+z^4", "--map", "y; x; z"],
        &["aut-enumerate", "--fermat", "5", "--variant", "graded"],
        &["hurwitz", "--d", "7"],
        &["catalog"],
        &["catalog", "--entry", "q-skew"],
        &["distinguish", "--left", "graded-elliptic", "--right", "elliptic"],
    ];
    for args in battery {
        let mut argv = args.to_vec();
        argv.push("--json");
        let payload = json_ok(&argv);
        let errors: Vec<String> = validator
            .iter_errors(&payload)
            .map(|e| e.to_string())
            .collect();
        assert!(
            validator.is_valid(&payload),
            "payload for {args:?} violates the schema: {errors:?}\n{payload}"
        );
    }
}

#[test]
fn text_and_json_carry_the_same_payload() {
    let cases: &[&[&str]] = &[
        &["hurwitz", "--d", "5"],
        &["singularity", "--potential", "x^3+y^3+z^3"],
        &["aut-enumerate", "--fermat", "5", "--variant", "fiber"],
        &["wmin", "--family", "adams-id", "--lambda", "1"],
    ];
    for args in cases {
        let (code, text, _) = run(args);
        assert_eq!(code, 0);
        let mut argv = args.to_vec();
        argv.push("--json");
        let payload = json_ok(&argv);
        for line in text.lines() {
            let (key, val) = line.split_once(": ").expect("text uses key: value lines");
            let field = &payload[key];
            let rendered = match field {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(val, rendered, "field {key} differs between text and JSON");
        }
    }
}

#[test]
fn seeded_sampling_is_reproducible() {
    let args = &[
        "jacobi",
        "--potential",
        "x^3+y^3+z^3+1*x*y*z",
        "--samples",
        "5",
        "--seed",
        "9",
        "--json",
    ];
    let first = run(args);
    let second = run(args);
    assert_eq!(first, second);
    let payload: Value = serde_json::from_str(first.1.trim()).unwrap();
    assert_eq!(payload["samples"], json!(5));
    assert_eq!(payload["leibniz_ok"], json!(true));
    assert_eq!(payload["sampled_jacobi_zero"], json!(true));
}

#[test]
fn quotient_normal_form_reduces_the_modulus() {
    let (code, stdout, _) = run(&["nf", "--modulus", "x^3+y^3+z^3-1", "--f", "z^3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "-y^3 - x^3 + 1");
}

#[test]
fn distinguish_reports_tag_their_evidence() {
    let payload = json_ok(&["distinguish", "--left", "weyl", "--right", "q-skew", "--json"]);
    let lines = payload["lines"].as_array().unwrap();
    assert!(!lines.is_empty());
    assert!(lines
        .iter()
        .any(|l| l["evidence"] == json!("computed-witness")));
    assert!(lines.iter().any(|l| l["evidence"] == json!("recorded")));
}
