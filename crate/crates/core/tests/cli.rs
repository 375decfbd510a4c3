//! End-to-end checks of the binary: exit-code contract, report schemas,
//! and output determinism.

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const TRIANGLE: &str = r#"
[[field.solenoids]]
center = [1.0, 0.0]
alpha = 0.5
[[field.solenoids]]
center = [-0.5, 0.8660254037844386]
alpha = 0.5
[[field.solenoids]]
center = [-0.5, -0.8660254037844386]
alpha = 0.5

[extension]
tau = "pi:1"
"#;

fn run(args: &[&str], config: &str) -> Output {
    let mut file = NamedTempFile::new().unwrap();
    file.write_all(config.as_bytes()).unwrap();
    let path = file.path().to_owned();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zeromodes"));
    cmd.args(args).arg("--config").arg(&path);
    cmd.output().unwrap()
}

#[test]
fn zeromodes_triangle_exits_zero_with_valid_report() {
    let out = run(&["zeromodes"], TRIANGLE);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["count"], 1);
    assert_eq!(report["n"], 3);
    assert!(report["verification"]["passed"].as_bool().unwrap());
}

#[test]
fn zeromodes_coupled_tau_reports_certificate() {
    let out = run(&["zeromodes"], &TRIANGLE.replace("pi:1", "pi:0.5"));
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["count"], 0);
    assert_eq!(report["certificate"]["null_dimension"], 0);
    assert!(
        report["certificate"]["smallest_singular_value"]
            .as_f64()
            .unwrap()
            > 0.0
    );
}

#[test]
fn malformed_alpha_exits_two() {
    let bad = TRIANGLE.replace("alpha = 0.5", "alpha = 1.2");
    let out = run(&["zeromodes"], &bad);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("intensity"));
}

#[test]
fn unknown_key_exits_two() {
    let bad = format!("{TRIANGLE}\n[run]\nbogus_key = 1\n");
    let out = run(&["zeromodes"], &bad);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn grid_on_empty_kernel_exits_four() {
    let out = run(&["grid"], &TRIANGLE.replace("pi:1", "pi:0.25"));
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn grid_emits_csv() {
    let cfg =
        format!("{TRIANGLE}\n[run]\ngrid_resolution = 8\ngrid_bounds = [-2.0, 2.0, -2.0, 2.0]\n");
    let out = run(&["grid"], &cfg);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,y,abs_psi_plus_sq,abs_psi_minus_sq");
    assert_eq!(lines.len(), 65); // header + 8x8 points, none skipped
    assert!(String::from_utf8_lossy(&out.stderr).contains("64 rows"));
}

#[test]
fn grid_skips_rows_at_solenoid_centers() {
    // the 3x3 grid over [0,2]x[-1,1] has a point exactly on the solenoid at (1, 0)
    let cfg =
        format!("{TRIANGLE}\n[run]\ngrid_resolution = 3\ngrid_bounds = [0.0, 2.0, -1.0, 1.0]\n");
    let out = run(&["grid"], &cfg);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 9); // header + 8 rows
    assert!(String::from_utf8_lossy(&out.stderr).contains("8 rows written, 1 grid points skipped"));
}

#[test]
fn spinflip_requires_primed_taus() {
    let out = run(&["spinflip"], TRIANGLE);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spinflip_verdicts() {
    let cfg = r#"
[[field.solenoids]]
center = [0.0, 0.0]
alpha = 0.3

[extension]
taus = ["pi:1.5"]
taus_prime = ["pi:0.5"]
"#;
    let out = run(&["spinflip"], cfg);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // tau + tau' = 2 pi: not V; |tau - tau'| = pi: W
    assert_eq!(report["v_equivalent"], false);
    assert_eq!(report["w_equivalent"], true);
    assert_eq!(report["numerics_agree_with_predicates"], true);
}

#[test]
fn classify_reports_table_pattern() {
    let cfg = r#"
[[field.solenoids]]
center = [0.0, 0.0]
alpha = 0.3
[[field.solenoids]]
center = [2.0, 0.0]
alpha = 0.7

[extension]
taus = ["pi:1", "pi:0"]
"#;
    let out = run(&["classify"], cfg);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["per_solenoid"][0], "EV_MATCH");
    assert_eq!(report["per_solenoid"][1], "EV_MATCH");
    assert_eq!(report["ev_is_square_of_this_dirac"], true);
    assert_eq!(report["max_match_impossible"], true);
}

#[test]
fn reruns_are_bit_identical() {
    let a = run(&["zeromodes"], TRIANGLE);
    let b = run(&["zeromodes"], TRIANGLE);
    assert_eq!(a.stdout, b.stdout);
}
