//! End-to-end tests of the `wkbq` binary: formats, exit codes, determinism.

use std::process::{Command, Output};

fn wkbq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wkbq"))
        .args(args)
        .env_remove("WKB_TOL_QUAD")
        .env_remove("WKB_TOL_ROOT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn spectrum_coulomb_csv() {
    let out = wkbq(&[
        "spectrum",
        "--potential",
        "coulomb",
        "--e2",
        "1",
        "--mode",
        "langer",
        "--nr-max",
        "2",
        "--l-max",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(
        lines[0],
        "potential,mode,n_r,l,E_wkb,E_analytic,E_oracle,abs_err,rel_err,status"
    );
    assert_eq!(lines.len(), 7, "header + 6 rows");
    for row in &lines[1..] {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 10);
        assert_eq!(cols[0], "coulomb");
        assert_eq!(cols[9], "ok");
        let rel: f64 = cols[8].parse().unwrap();
        assert!(rel <= 1e-8, "rel_err {rel} in row {row}");
    }
}

#[test]
fn missing_parameter_is_usage_error() {
    let out = wkbq(&[
        "spectrum",
        "--potential",
        "coulomb",
        "--nr-max",
        "1",
        "--l-max",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_potential_is_usage_error() {
    let out = wkbq(&[
        "spectrum",
        "--potential",
        "yukawa",
        "--e2",
        "1",
        "--nr-max",
        "0",
        "--l-max",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn negative_strength_is_usage_error() {
    let out = wkbq(&[
        "spectrum",
        "--potential",
        "hulthen",
        "--V0",
        "-8",
        "--r0",
        "1",
        "--nr-max",
        "0",
        "--l-max",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn hulthen_partial_results_exit_3() {
    let out = wkbq(&[
        "spectrum",
        "--potential",
        "hulthen",
        "--V0",
        "8",
        "--r0",
        "1",
        "--mode",
        "langer",
        "--nr-max",
        "5",
        "--l-max",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert_eq!(text.matches(",ok\n").count(), 3);
    assert_eq!(text.matches(",no-bound-state\n").count(), 3);
}

#[test]
fn csv_output_is_deterministic() {
    let args = [
        "spectrum",
        "--potential",
        "morse",
        "--V0",
        "10",
        "--r0",
        "1",
        "--alpha",
        "1",
        "--mode",
        "none",
        "--nr-max",
        "1",
        "--l-max",
        "0",
    ];
    let a = stdout(&wkbq(&args));
    let b = stdout(&wkbq(&args));
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn json_output_round_trips() {
    let out = wkbq(&[
        "spectrum",
        "--potential",
        "coulomb",
        "--e2",
        "1",
        "--nr-max",
        "1",
        "--l-max",
        "0",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["potential"], "coulomb");
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
    // round trip through the typed representation
    let table: wkbq::spectrum::SpectrumTable = serde_json::from_value(v.clone()).unwrap();
    let again: serde_json::Value = serde_json::from_str(&table.to_json()).unwrap();
    assert_eq!(v, again);
}

#[test]
fn compare_adjudicates_the_morse_routes() {
    // bare-potential route: oracle agrees with the WKB value to ~5e-3
    // (half-line boundary), closed form matches WKB to 1e-7
    let out = wkbq(&[
        "compare",
        "--potential",
        "morse",
        "--V0",
        "10",
        "--r0",
        "1",
        "--alpha",
        "1",
        "--mode",
        "none",
        "--nr-max",
        "0",
        "--l-max",
        "0",
        "--grid-points",
        "4001",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let cols: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let e_wkb: f64 = cols[4].parse().unwrap();
    let e_analytic: f64 = cols[5].parse().unwrap();
    let e_oracle: f64 = cols[6].parse().unwrap();
    assert!((e_wkb - e_analytic).abs() / e_analytic.abs() < 1e-7);
    assert!((e_oracle - e_wkb).abs() < 1e-2);

    // Langer route: the analytic value sits well away from both the
    // quadrature WKB value and the oracle
    let out = wkbq(&[
        "compare",
        "--potential",
        "morse",
        "--V0",
        "10",
        "--r0",
        "1",
        "--alpha",
        "1",
        "--mode",
        "langer",
        "--nr-max",
        "0",
        "--l-max",
        "0",
        "--grid-points",
        "4001",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let cols: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let rel: f64 = cols[8].parse().unwrap();
    assert!(
        rel > 0.2,
        "Langer-route rel_err should expose the route gap, got {rel}"
    );
}

#[test]
fn coulomb_schrodinger_mode_shows_the_defect() {
    let out = wkbq(&[
        "spectrum",
        "--potential",
        "coulomb",
        "--e2",
        "1",
        "--mode",
        "schrodinger",
        "--nr-max",
        "0",
        "--l-max",
        "1",
    ]);
    // l = 0 row fails (single turning point) → numeric-failure exit code
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(
        text.contains(",failed\n"),
        "l=0 row must be marked failed:\n{text}"
    );
    let l1_row: Vec<&str> = text
        .lines()
        .find(|l| l.starts_with("coulomb,schrodinger,0,1"))
        .expect("l=1 row present")
        .split(',')
        .collect();
    let rel: f64 = l1_row[8].parse().unwrap();
    assert!(rel > 1e-3, "plain quantization must deviate: rel_err {rel}");
}

#[test]
fn angular_record() {
    let out = wkbq(&["angular", "--n-theta", "2", "--m", "-3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let cols: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(cols[2], "5"); // l = |m| + n_θ
    let m2: f64 = cols[3].parse().unwrap();
    assert!((m2 - 30.25).abs() < 1e-7);
    assert_eq!(cols[6], "true");
}

#[test]
fn angular_rejects_negative_n_theta() {
    let out = wkbq(&["angular", "--n-theta", "-1", "--m", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn wavefn_angular_samples_are_finite() {
    let out = wkbq(&[
        "wavefn",
        "--kind",
        "angular",
        "--l",
        "5",
        "--m",
        "2",
        "--samples",
        "64",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut rows = 0;
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let theta: f64 = cols[0].parse().unwrap();
        let value: f64 = cols[1].parse().unwrap();
        assert!(theta.is_finite() && value.is_finite());
        rows += 1;
    }
    assert!(
        rows >= 32,
        "most samples inside the allowed interval, got {rows}"
    );
}

#[test]
fn wavefn_radial_is_a_standing_wave() {
    let out = wkbq(&[
        "wavefn",
        "--kind",
        "radial",
        "--p-n",
        "1",
        "--chi1",
        "0",
        "--r-min",
        "0",
        "--r-max",
        "12.566370614359172",
        "--samples",
        "400",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let values: Vec<(f64, f64)> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split(',');
            (
                it.next().unwrap().parse().unwrap(),
                it.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    assert_eq!(values.len(), 400);
    // cosine of period 2πħ/p_n = 2π: two full periods over the range
    let sign_changes = values
        .windows(2)
        .filter(|w| w[0].1.signum() != w[1].1.signum())
        .count();
    assert_eq!(sign_changes, 4);
    for (r, v) in &values {
        assert!((v - (r - std::f64::consts::FRAC_PI_4).cos()).abs() < 1e-12);
    }
}

#[test]
fn wavefn_psi_flag_divides_by_sqrt_sin() {
    let plain = stdout(&wkbq(&[
        "wavefn",
        "--kind",
        "asymptotic",
        "--l",
        "4",
        "--m",
        "0",
        "--samples",
        "16",
    ]));
    let psi = stdout(&wkbq(&[
        "wavefn",
        "--kind",
        "asymptotic",
        "--l",
        "4",
        "--m",
        "0",
        "--samples",
        "16",
        "--psi",
    ]));
    for (a, b) in plain.lines().skip(1).zip(psi.lines().skip(1)) {
        let (ta, va): (f64, f64) = {
            let mut it = a.split(',');
            (
                it.next().unwrap().parse().unwrap(),
                it.next().unwrap().parse().unwrap(),
            )
        };
        let vb: f64 = b.split(',').nth(1).unwrap().parse().unwrap();
        assert!((vb - va / ta.sin().sqrt()).abs() < 1e-10);
    }
}

#[test]
fn wavefn_radial_rejects_psi_flag() {
    let out = wkbq(&["wavefn", "--kind", "radial", "--p-n", "1", "--psi"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_reports_every_invariant_and_exits_consistently() {
    let out = wkbq(&["check"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert!(
        lines.len() >= 20,
        "one line per invariant, got {}",
        lines.len()
    );
    let mut any_fail = false;
    for line in &lines {
        assert!(
            line.starts_with("ok  ") || line.starts_with("FAIL"),
            "unexpected line: {line}"
        );
        any_fail |= line.starts_with("FAIL");
    }
    let expected = if any_fail { 2 } else { 0 };
    assert_eq!(out.status.code(), Some(expected));
}

#[test]
fn check_with_loose_tolerances_fails_no_additional_checks() {
    let strict = stdout(&wkbq(&["check"]));
    let loose = stdout(&wkbq(&[
        "check",
        "--tol-root",
        "1e-7",
        "--tol-quad",
        "1e-9",
    ]));
    let failures = |s: &str| -> Vec<String> {
        s.lines()
            .filter(|l| l.starts_with("FAIL"))
            .map(|l| l.split('—').next().unwrap().trim().to_string())
            .collect()
    };
    assert_eq!(failures(&strict), failures(&loose));
}

#[test]
fn env_tolerance_override_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_wkbq"))
        .args([
            "spectrum",
            "--potential",
            "coulomb",
            "--e2",
            "1",
            "--nr-max",
            "0",
            "--l-max",
            "0",
        ])
        .env("WKB_TOL_ROOT", "1e-6")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
}
