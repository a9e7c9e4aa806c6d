use std::process::{Command, Output};

use serde_json::Value;

fn braidcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidcoh"))
        .args(args)
        .env_remove("BRAIDCOH_TRUNC")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn jordan_cohomology() {
    let out = braidcoh(&["cohomology", "--algebra", "jordan", "--max-h", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"H":[1,2,1,0]}"#);
}

#[test]
fn super_jordan_cohomology() {
    let out = braidcoh(&["cohomology", "--algebra", "super-jordan", "--max-h", "5"]);
    assert_eq!(json(&out)["H"], serde_json::json!([1, 2, 2, 2, 2, 2]));
}

#[test]
fn normal_form() {
    let out = braidcoh(&["nf", "--algebra", "jordan", "--expr", "y*x"]);
    assert_eq!(json(&out), Value::String("x*y - 1/2*x^2".into()));
    let out = braidcoh(&["nf", "--algebra", "super-jordan", "--expr", "y*y*x + x*x"]);
    assert_eq!(json(&out), Value::String("x*y^2 + x*y*x".into()));
}

#[test]
fn action_and_inverse() {
    let out = braidcoh(&["act", "--algebra", "super-jordan", "--expr", "y", "--k", "2"]);
    assert_eq!(json(&out), Value::String("y - 2*x".into()));
    let out = braidcoh(&["act", "--algebra", "super-jordan", "--expr", "y", "--k", "-1"]);
    assert_eq!(json(&out), Value::String("-y - x".into()));
}

#[test]
fn super_jordan_commutativity() {
    let out = braidcoh(&[
        "verify-commutativity", "--algebra", "super-jordan", "--p", "2", "--q", "2", "--trunc", "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], Value::Bool(true));
    let rows = v["results"][0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    for row in rows {
        for key in ["p", "q", "generator", "lhs", "rhs", "sign", "pass", "psi", "phi"] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn commutativity_sweep_with_random_lift() {
    let out = braidcoh(&["verify-commutativity", "--algebra", "jordan", "--max-h", "2", "--rng-seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn seeded_maps_report_conflicts() {
    let out = braidcoh(&[
        "verify-commutativity", "--algebra", "super-jordan", "--p", "1", "--q", "2", "--seed-paper-maps", "on",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!json(&out)["seed_conflicts"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["cup-table", "--algebra", "super-jordan", "--p", "2", "--q", "1"];
    assert_eq!(braidcoh(&args).stdout, braidcoh(&args).stdout);
    let args = ["coproduct", "--algebra", "jordan", "--expr", "y*y"];
    assert_eq!(braidcoh(&args).stdout, braidcoh(&args).stdout);
}

#[test]
fn coduoid() {
    assert_eq!(braidcoh(&["verify-coduoid", "--algebra", "jordan"]).status.code(), Some(0));
    let out = braidcoh(&["verify-coduoid", "--algebra", "super-jordan"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["obstruction"].is_string());
    let out = braidcoh(&["verify-coduoid", "--algebra", "super-jordan", "--max-h", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn presentation_dec_and_resolution_checks() {
    for alg in ["jordan", "super-jordan"] {
        for cmd in [
            vec!["check-presentation", "--max-degree", "4"],
            vec!["verify-dec", "--max-n", "2", "--max-degree", "4"],
            vec!["validate-resolution", "--max-degree", "5"],
        ] {
            let mut args = cmd.clone();
            args.extend(["--algebra", alg]);
            assert_eq!(braidcoh(&args).status.code(), Some(0), "{args:?}");
        }
    }
}

#[test]
fn presentation_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/super_jordan.json");
    let alg = format!("file:{path}");
    let out = braidcoh(&["basis", "--algebra", &alg, "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let dims: Vec<u64> = json(&out)["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 2, 3, 4]);
}

#[test]
fn text_format() {
    let out = braidcoh(&["cohomology", "--max-h", "2", "--format", "text"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "H = (1, 2, 1)");
}

#[test]
fn truncation_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_braidcoh"))
        .args(["basis", "--algebra", "jordan"])
        .env("BRAIDCOH_TRUNC", "2")
        .output()
        .unwrap();
    assert_eq!(json(&out)["degrees"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors() {
    assert_eq!(braidcoh(&["cohomology", "--bogus"]).status.code(), Some(2));
    assert_eq!(braidcoh(&["nf", "--algebra", "nope", "--expr", "x"]).status.code(), Some(2));
    assert_eq!(braidcoh(&["nf", "--expr", "x*z"]).status.code(), Some(2));
    assert_eq!(braidcoh(&["nf", "--algebra", "file:/does/not/exist", "--expr", "x"]).status.code(), Some(2));
    assert_eq!(braidcoh(&["verify-dec", "--p", "1"]).status.code(), Some(2));
}
