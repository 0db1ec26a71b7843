use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stripconcave")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixtures() -> Value {
    serde_json::from_str(&stdout(&run(&["fixtures"]))).unwrap()
}

const TRAPEZOID: &str = r#"{"lambda":[6,4,3,1,1],"lambda_bar":[5,2],"mu":[1,-7,-2],"nu":[4,-5,1]}"#;

#[test]
fn check_reports_feasible_and_certificates() {
    let out = run(&["check", "--spec", TRAPEZOID]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), r#"{"feasible":true}"#);
    let bad = r#"{"lambda":[6,4,3,1,1],"lambda_bar":[5,2],"mu":[0,0,0],"nu":[8,0,0]}"#;
    for extra in [&[][..], &["--exhaustive"][..]] {
        let mut args = vec!["check", "--spec", bad];
        args.extend_from_slice(extra);
        let out = run(&args);
        assert_eq!(out.status.code(), Some(1));
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["feasible"], json!(false));
        assert_eq!(v["certificate"]["kind"], json!("inequality"));
    }
}

#[test]
fn general_check_with_reduction_override() {
    let f = fixtures();
    let config = f["hexagon_array"]["config"].to_string();
    let spec = f["hexagon_spec"].to_string();
    for c in [None, Some("100")] {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_stripconcave"));
        cmd.args(["check", "--config", &config, "--spec", &spec]);
        if let Some(c) = c {
            cmd.env("STRIPCONCAVE_REDUCTION_C", c);
        }
        let out = cmd.output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn build_reproduces_boundary() {
    let out = run(&["build", "--spec", TRAPEZOID]);
    assert_eq!(out.status.code(), Some(0));
    let x: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(x["rows"][0][0], json!(0));
    let flow = run(&["flow", "to", "--array", &x.to_string()]);
    assert_eq!(flow.status.code(), Some(0));
}

#[test]
fn swap_matches_fixture() {
    let f = fixtures();
    let out = run(&["swap", "--layer", "2", "--flow", &f["trapezoid_flow"].to_string()]);
    assert_eq!(out.status.code(), Some(0));
    let got: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(got, f["swapped_flow"]);
}

#[test]
fn flow_round_trip() {
    let f = fixtures();
    let g = run(&["flow", "to", "--array", &f["trapezoid_array"].to_string()]);
    let g: Value = serde_json::from_str(&stdout(&g)).unwrap();
    assert_eq!(g, f["trapezoid_flow"]);
    let x = run(&["flow", "from", "--flow", &g.to_string(), "--lambda", "[6,4,3,1,1]"]);
    let x: Value = serde_json::from_str(&stdout(&x)).unwrap();
    assert!(x["rows"].as_array().unwrap().iter().all(|row| row[0] == json!(0)));
    let back = run(&["flow", "to", "--array", &x.to_string()]);
    assert_eq!(serde_json::from_str::<Value>(&stdout(&back)).unwrap(), g);
}

#[test]
fn tableau_commands() {
    let f = fixtures();
    let out = run(&["tableau", "from-pattern", "--pattern", &f["trapezoid_pattern"].to_string()]);
    let t: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(t, f["trapezoid_tableau"]);
    let c = run(&["tableau", "content", "--tableau", &t.to_string()]);
    assert_eq!(stdout(&c).trim(), "[3,2,3]");
}

#[test]
fn counting_commands() {
    let spec = r#"{"lambda":[2,1,0],"lambda_bar":[],"nu":[1,1,1]}"#;
    assert_eq!(stdout(&run(&["kostka", "--spec", spec])).trim(), "2");
    assert_eq!(stdout(&run(&["count", "--spec", spec, "--k", "1"])).trim(), "2");
    let facets: Value = serde_json::from_str(&stdout(&run(&["facets", "--n", "2", "--m", "1"]))).unwrap();
    assert_eq!(facets["count"], json!(8));
    assert_eq!(facets["facets"].as_array().unwrap().len(), 8);
}

#[test]
fn vertices_and_decompose() {
    let v: Value = serde_json::from_str(&stdout(&run(&["vertices", "--spec", r#"{"lambda":[2,1],"lambda_bar":[1]}"#])))
        .unwrap();
    assert_eq!(v["count"], json!(1));
    let f = fixtures();
    let d: Value =
        serde_json::from_str(&stdout(&run(&["decompose", "--array", &f["trapezoid_array"].to_string()]))).unwrap();
    assert!(!d.as_array().unwrap().is_empty());
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let out = run(&["kostka", "--spec", r#"{"lambda":[2,1],"lambda_bar":[],"nu":[1,1,1]}"#]);
    assert_ne!(out.status.code(), Some(0));
    assert!(!out.stderr.is_empty());
    assert_ne!(run(&["check", "--spec", "/nonexistent/spec.json"]).status.code(), Some(0));
}
