//! End-to-end checks of the command-line interface: JSON schema, exit codes,
//! config files and byte-level determinism.

use std::process::{Command, Output};

fn doubleplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_doubleplane"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn lines_json_schema_and_exit_code() {
    let out = doubleplane(&["lines", "--coeffs", "1,0;0,1;1,-1", "--format", "json"]);
    assert!(out.status.success(), "exit code 0 when all checks pass");
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    for key in ["scenario", "computed", "asserted", "checks"] {
        assert!(value.get(key).is_some(), "top-level key {key}");
    }
    let checks = value["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c.get("name").is_some());
        assert!(c.get("pass").is_some());
        assert!(c.get("detail").is_some());
        assert_eq!(c["pass"], true);
    }
    assert_eq!(value["scenario"]["family"], "lines-odd");
}

#[test]
fn hyper_runs_and_reports() {
    let out = doubleplane(&["hyper", "--poly", "(x-1)^2*(x-2)^4", "--d", "2,4"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["scenario"]["family"], "hyperelliptic");
    assert_eq!(value["computed"]["cl_t"]["group"]["pretty"], "Z/2 + Z");
}

#[test]
fn reports_are_byte_identical() {
    let args = ["hyper", "--poly", "(x-1)^2*(x-2)^2", "--format", "json"];
    let a = doubleplane(&args);
    let b = doubleplane(&args);
    assert_eq!(a.stdout, b.stdout, "identical input gives identical bytes");
}

#[test]
fn bad_input_exits_with_error() {
    // proportional lines: the square-free hypothesis fails
    let out = doubleplane(&["lines", "--coeffs", "1,0;2,0;0,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    // non-split polynomial
    let out = doubleplane(&["hyper", "--poly", "x^2+1"]);
    assert_eq!(out.status.code(), Some(2));

    // even n has no arrowhead intersection matrix
    let out = doubleplane(&["intersection", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn graph_emits_dot_and_json() {
    let out = doubleplane(&["graph", "--coeffs", "1,0;0,1;1,-1", "--emit", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph arrangement {"));
    assert!(text.contains("\"F0\""));

    let out = doubleplane(&["graph", "--coeffs", "1,0;0,1;1,-1", "--emit", "json"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["cycle_rank"], 2);
}

#[test]
fn intersection_subcommand() {
    let out = doubleplane(&["intersection", "--n", "5"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["abs_det"], "16");
    assert_eq!(value["cokernel"]["pretty"], "(Z/2)^4");
}

#[test]
fn crossedproduct_subcommand() {
    let out = doubleplane(&["crossedproduct", "--poly", "(x-1)^2*(x-2)^4", "--index", "2"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["verbatim_matches"], 14);
    assert_eq!(value["oracle_all_match"], true);
    assert_eq!(value["pass"], true);
}

#[test]
fn config_file_supplies_parameters() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("doubleplane-test-{}.conf", std::process::id()));
    std::fs::write(
        &path,
        "# scenario parameters\npoly = (x-1)^2*(x-2)^2\nd = 2\nformat = json\n",
    )
    .unwrap();
    let via_config = doubleplane(&["hyper", "--config", path.to_str().unwrap()]);
    let via_flags = doubleplane(&["hyper", "--poly", "(x-1)^2*(x-2)^2", "--d", "2"]);
    std::fs::remove_file(&path).ok();
    assert!(via_config.status.success());
    assert_eq!(via_config.stdout, via_flags.stdout);
}

#[test]
fn vary_roots_flag_adds_check() {
    // asymmetric multiplicities exercise the relabelling path
    let out = doubleplane(&["hyper", "--poly", "(x-1)^2*(x-2)^4", "--vary-roots"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let vary = value["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "vary-roots-invariance")
        .expect("vary-roots check present");
    assert_eq!(vary["pass"], true, "{}", vary["detail"]);
}
