//! End-to-end checks of the polar-calc binary: report schema, numerical
//! examples, exit codes and file emission.

use std::process::Output;

use serde_json::Value;

fn polar_calc(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_polar-calc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = polar_calc(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?} emitted invalid JSON: {e}"))
}

fn complex_of(value: &Value) -> (f64, f64) {
    (value[0].as_f64().unwrap(), value[1].as_f64().unwrap())
}

#[test]
fn report_envelope_is_stable() {
    let report = run_json(&["eval", "L", "--at", "1,0"]);
    for key in ["command", "inputs", "outputs", "diagnostics", "wall_time_ms"] {
        assert!(report.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(report["command"], "eval");
    assert_eq!(report["wall_time_ms"], 0);
    assert_eq!(report["inputs"]["expr"], "L");
}

#[test]
fn dpol_of_big_l_prints_unit_value() {
    let report = run_json(&["dpol", "L", "--at", "1,0"]);
    let (re, im) = complex_of(&report["outputs"]["value"]);
    assert!((re - 1.0).abs() <= 1e-12 && im.abs() <= 1e-12);
}

#[test]
fn angle_at_unit_radius_is_the_difference() {
    let report = run_json(&["angle", "--r0", "1", "--phi1", "0.3", "--phi2", "1.1"]);
    let beta = report["outputs"]["beta"].as_f64().unwrap();
    assert!((beta - 0.8).abs() <= 1e-12, "beta = {beta}");
}

#[test]
fn integrate_radial_segment_of_one() {
    let report =
        run_json(&["integrate", "1", "--curve", "segment(1,0,2.718281828459045,0)"]);
    let (re, im) = complex_of(&report["outputs"]["value"]);
    assert!((re - (std::f64::consts::E - 1.0)).abs() <= 1e-9);
    assert!(im.abs() <= 1e-12);
}

#[test]
fn mellin_cubic() {
    let report = run_json(&["mellin", "x^3", "--c", "0", "--x", "2"]);
    let (re, _) = complex_of(&report["outputs"]["value"]);
    assert!((re - 24.0).abs() <= 1e-9);
}

#[test]
fn theta_pol_iterates() {
    let report = run_json(&["theta-pol", "sin(z)", "--at", "1,0", "--k", "1"]);
    let (re, _) = complex_of(&report["outputs"]["value"]);
    assert!((re - 1.0_f64.cos()).abs() <= 1e-10);

    let report = run_json(&["theta-pol", "L", "--at", "1,0", "--k", "2"]);
    let (re, im) = complex_of(&report["outputs"]["value"]);
    assert!(re.abs() <= 1e-9 && im.abs() <= 1e-9);
}

#[test]
fn theta_pol_rejects_iterates_with_nonzero_c() {
    let out = polar_calc(&["theta-pol", "L", "--at", "1,0", "--k", "2", "--c", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn maxradius_of_a_rectangle() {
    let report =
        run_json(&["maxradius", "--center", "1.5,0.5", "--curve", "rect(1,2,0,1)"]);
    let rho = report["outputs"]["rho_max"].as_f64().unwrap();
    // Nearest edge in log coordinates is r = 2, at log(2) − log(1.5).
    let expected = (2.0f64 / 1.5).ln();
    assert!((rho - expected).abs() <= 1e-9, "rho = {rho}, expected {expected}");
}

#[test]
fn taylor_outputs_the_documented_expansion_schema() {
    let report = run_json(&["taylor", "sin(z)", "--center", "1,0", "--order", "4"]);
    let outputs = &report["outputs"];
    assert!(outputs["center"]["r"].is_number());
    assert!(outputs["center"]["theta"].is_number());
    assert!(outputs["rho_sample"].is_number());
    let coefficients = outputs["coefficients"].as_array().unwrap();
    assert_eq!(coefficients.len(), 5);
    assert!((coefficients[0][0].as_f64().unwrap() - 1.0_f64.sin()).abs() <= 1e-10);
    assert!(outputs["tail_estimate"].is_number());
}

#[test]
fn check_cr_verdicts_and_exit_codes() {
    let report = run_json(&["check-cr", "sin(z)", "--rect", "0.5,2,-1,1"]);
    assert_eq!(report["outputs"]["verdict"], "consistent");

    let out = polar_calc(&["check-cr", "r", "--rect", "0.5,2,-1,1", "--expect-analytic"]);
    assert_eq!(out.status.code(), Some(1), "verdict failure must exit 1");
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["outputs"]["verdict"], "inconsistent");
}

#[test]
fn morera_verdicts_and_exit_codes() {
    let report = run_json(&["morera", "L", "--rect", "1,2,0,1", "--grid", "4x4"]);
    assert_eq!(report["outputs"]["verdict"], "consistent");

    let out = polar_calc(&["morera", "r", "--rect", "1,2,0,1", "--grid", "4x4", "--expect-analytic"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["outputs"]["max_loop"].as_f64().unwrap() > 0.1);
}

#[test]
fn path_check_requires_two_curves() {
    let out = polar_calc(&["path-check", "sin(z)", "--curve", "segment(1,0,2,1)"]);
    assert_eq!(out.status.code(), Some(2));

    let report = run_json(&[
        "path-check",
        "sin(z)",
        "--curve",
        "segment(1,0,2,1)",
        "--curve",
        "param(exp(t*0.6931471805599453); t; 0, 1)",
    ]);
    assert_eq!(report["outputs"]["verdict"], "pass");
}

#[test]
fn negative_flag_values_are_accepted() {
    let report = run_json(&["beta-profile", "--phi1", "0.5", "--phi2", "-0.7"]);
    assert_eq!(report["outputs"]["classification"], "monotone");
    let report = run_json(&["theta-pol", "L", "--at", "1,0", "--c", "-2.5"]);
    let (re, _) = complex_of(&report["outputs"]["value"]);
    assert!((re - 1.0).abs() <= 1e-12);
    let report = run_json(&[
        "net", "z^2", "--rlines", "1,2", "--thetalines", "-0.8,0.3",
    ]);
    assert_eq!(report["outputs"]["curves"], 4);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(polar_calc(&[]).status.code(), Some(2));
    assert_eq!(polar_calc(&["eval", "r +", "--at", "1,0"]).status.code(), Some(2));
    assert_eq!(polar_calc(&["eval", "r", "--at", "-1,0"]).status.code(), Some(2));
    assert_eq!(
        polar_calc(&["integrate", "1", "--curve", "spiral(1,0,2,1)"]).status.code(),
        Some(2)
    );
}

#[test]
fn numerical_failures_exit_1() {
    // Log of zero at the evaluation point.
    let out = polar_calc(&["eval", "log(r - 1)", "--at", "1,0"]);
    assert_eq!(out.status.code(), Some(1));
    // Taylor pre-scan rejects a non-analytic input.
    let out = polar_calc(&["taylor", "r", "--center", "1,0", "--order", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn net_and_disk_write_svg_and_csv() {
    let dir = std::env::temp_dir().join(format!("polar-calc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("net.svg");
    let csv = dir.join("net.csv");
    let report = run_json(&[
        "net",
        "exp(-i*theta)/r",
        "--rlines",
        "1,2",
        "--thetalines",
        "0,0.7",
        "--svg",
        svg.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(report["outputs"]["max_abs_normalized_inner"].as_f64().unwrap() <= 1e-6);
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.starts_with("<svg"));
    assert!(svg_text.contains("<polyline"));
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("curve,t,re,im"));
    assert!(csv_text.lines().count() > 4);

    let disk_svg = dir.join("disk.svg");
    run_json(&[
        "disk",
        "--center",
        "1,0",
        "--radius",
        "1",
        "--svg",
        disk_svg.to_str().unwrap(),
    ]);
    assert!(std::fs::read_to_string(&disk_svg).unwrap().starts_with("<svg"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn json_floats_use_17_significant_digits() {
    let out = polar_calc(&["eval", "1/3", "--at", "1,0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("3.3333333333333331e-1"),
        "expected 17-digit float rendering, got {text}"
    );
}

#[test]
fn timing_flag_is_the_only_nondeterminism() {
    let a = polar_calc(&["taylor", "exp(z)", "--center", "1,0", "--order", "6"]);
    let b = polar_calc(&["taylor", "exp(z)", "--center", "1,0", "--order", "6"]);
    assert_eq!(a.stdout, b.stdout);
    // With --timing the field may vary but the report must stay valid.
    let timed = polar_calc(&["--timing", "taylor", "exp(z)", "--center", "1,0", "--order", "6"]);
    let report: Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(report["wall_time_ms"].is_u64());
}
