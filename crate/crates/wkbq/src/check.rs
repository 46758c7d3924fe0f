//! The invariant self-test suite behind `wkbq check`.
//!
//! Each check exercises one documented invariant and reports a pass/fail
//! line with the measured numbers. Checks whose thresholds are limited by
//! solver accuracy scale with the configured solver tolerances, so loosening
//! the tolerances never turns a passing suite red; the defaults pin the
//! advertised thresholds.
//!
//! Two checks compare the numerical phase integral against the analytic
//! closed forms over (E, l) grids. For Coulomb, the oscillator, and Morse
//! without a centrifugal term the two agree to quadrature accuracy; for
//! Morse and Hulthén *with* a centrifugal term the analytic expressions are
//! not the values of the true integrals (the deviation starts at ~5e-4
//! absolute for the Hulthén ground state and grows with l), so those checks
//! report the measured disagreement and fail. This is a real property of
//! the formulas, reproduced independently by high-precision quadrature; the
//! closed-form spectra themselves remain available through the closed-form
//! solver route, and for Hulthén s-waves they coincide with the exact
//! quantum spectrum (which the oracle checks confirm).

use crate::angular::{
    angular_phase_closed_form, angular_phase_integral_with, solve_m_squared, AngularContext,
};
use crate::error::Error;
use crate::oracle::{self, GridSpec};
use crate::potentials::{analytic_eigenvalue, CentrifugalMode, PhysicalConstants, PotentialModel};
use crate::quantize::{
    closed_form_phase_integral, phase_integral_with, solve_eigenvalue, RadialContext,
};
use crate::spectrum::{spectrum, SpectrumTable};
use crate::tol;
use crate::wavefn;

/// Solver tolerances used while running the suite.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub quad_tol: f64,
    pub root_tol: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            quad_tol: tol::QUAD_REL_TOL,
            root_tol: tol::ROOT_REL_TOL,
        }
    }
}

/// Outcome of one invariant check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn pass(name: &'static str, detail: String) -> Self {
        Self {
            name,
            passed: true,
            detail,
        }
    }
    fn fail(name: &'static str, detail: String) -> Self {
        Self {
            name,
            passed: false,
            detail,
        }
    }
    fn from(name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            name,
            passed,
            detail,
        }
    }
}

const C: PhysicalConstants = PhysicalConstants {
    hbar: 1.0,
    mass: 1.0,
};

fn four_models() -> [PotentialModel; 4] {
    [
        PotentialModel::Coulomb { e2: 1.0 },
        PotentialModel::Harmonic3D { omega: 1.0 },
        PotentialModel::Morse {
            v0: 10.0,
            r0: 1.0,
            alpha: 1.0,
        },
        PotentialModel::Hulthen { v0: 8.0, r0: 1.0 },
    ]
}

/// Run every invariant check; the CLI prints one line per report.
pub fn run_all(opts: &CheckOptions) -> Vec<CheckReport> {
    vec![
        potentials_continuity(),
        morse_route_identity(),
        analytic_monotonicity(),
        phase_integral_monotonicity(opts),
        closed_form_vs_quadrature(opts),
        quantization_inversion_closed_form(),
        quantization_inversion_quadrature(opts),
        negative_control(opts),
        degenerate_limit(opts),
        angular_closed_form_identity(opts),
        angular_quantization(opts),
        angular_symmetry_and_monotonicity(opts),
        boundary_exponents(),
        norm_consistency(),
        asymptotic_match(opts),
        quasiclassicality_trend(opts),
        oracle_convergence_order(),
        oracle_vs_closed_forms(),
        oracle_vs_morse_closed_form(),
        oracle_orthogonality(),
        csv_determinism(opts),
        json_round_trip(opts),
    ]
}

fn potentials_continuity() -> CheckReport {
    let name = "potentials: V(r) finite and single-welled on the log grid";
    for m in four_models() {
        let grid = crate::rootfind::log_grid(1e-6 * m.r_scale(&C), 1e3 * m.r_scale(&C), 4000);
        let vals: Vec<f64> = grid
            .iter()
            .map(|&r| m.evaluate(&C, r).unwrap_or(f64::NAN))
            .collect();
        if vals.iter().any(|v| !v.is_finite()) {
            return CheckReport::fail(name, format!("{}: non-finite V(r)", m.name()));
        }
        let slopes: Vec<f64> = vals.windows(2).map(|w| w[1] - w[0]).collect();
        let flips = slopes
            .windows(2)
            .filter(|d| d[0] != 0.0 && d[1] != 0.0 && d[0].signum() != d[1].signum())
            .count();
        let max_flips = usize::from(matches!(m, PotentialModel::Morse { .. }));
        if flips > max_flips {
            return CheckReport::fail(name, format!("{}: {} slope sign flips", m.name(), flips));
        }
    }
    CheckReport::pass(name, "4 models, 4000-point log grids".into())
}

fn morse_route_identity() -> CheckReport {
    let name = "potentials: Morse Langer route at λ=0 equals the Schrödinger route";
    let (v0, r0, alpha) = (10.0f64, 1.0, 1.0);
    let s = r0 * (2.0 * v0).sqrt() / alpha;
    let mut worst = 0.0f64;
    for n_r in 0..4 {
        let b = 1.0 - (n_r as f64 + 0.5 + 0.0) / s;
        let e_lam0 = -v0 * b * b;
        let m = PotentialModel::Morse { v0, r0, alpha };
        let e_28 = analytic_eigenvalue(&m, &C, n_r, 0, CentrifugalMode::Schrodinger).unwrap();
        worst = worst.max((e_lam0 - e_28).abs());
    }
    CheckReport::from(name, worst == 0.0, format!("max |difference| = {worst:e}"))
}

fn analytic_monotonicity() -> CheckReport {
    let name = "potentials: closed-form spectra strictly increasing in n_r";
    for m in four_models() {
        let mut prev = f64::NEG_INFINITY;
        let mut n_r = 0;
        while let Some(e) = analytic_eigenvalue(&m, &C, n_r, 0, CentrifugalMode::Langer) {
            if e <= prev {
                return CheckReport::fail(name, format!("{} at n_r={n_r}", m.name()));
            }
            prev = e;
            n_r += 1;
            if n_r > 8 {
                break;
            }
        }
    }
    CheckReport::pass(name, "4 models, full bound range".into())
}

fn phase_integral_monotonicity(opts: &CheckOptions) -> CheckReport {
    let name = "quantize: phase integral strictly increasing in E";
    // energies must sit inside each bound bracket (above min V_eff)
    let cases: [(PotentialModel, u32, [f64; 4]); 3] = [
        (
            PotentialModel::Coulomb { e2: 1.0 },
            1,
            [-0.2, -0.125, -0.08, -0.05],
        ),
        (
            PotentialModel::Hulthen { v0: 8.0, r0: 1.0 },
            0,
            [-20.0, -10.0, -4.5, -1.0],
        ),
        (
            PotentialModel::Morse {
                v0: 10.0,
                r0: 1.0,
                alpha: 1.0,
            },
            1,
            [-5.0, -3.5, -2.0, -1.0],
        ),
    ];
    for (m, l, energies) in cases {
        let mut prev = -1.0;
        for e in energies {
            let ctx = RadialContext::new(m, C, e, l, CentrifugalMode::Langer);
            let i = match phase_integral_with(&ctx, opts.quad_tol) {
                Ok(v) => v,
                Err(err) => return CheckReport::fail(name, format!("{} E={e}: {err}", m.name())),
            };
            if i <= prev {
                return CheckReport::fail(
                    name,
                    format!("{}: I({e}) = {i} not above {prev}", m.name()),
                );
            }
            prev = i;
        }
    }
    CheckReport::pass(name, "3 potentials × 4 energies each".into())
}

/// (model, l-list under Langer mode, energies); mode None is represented by
/// l = None entries.
fn agreement_grid() -> Vec<(PotentialModel, Option<u32>, Vec<f64>)> {
    vec![
        (
            PotentialModel::Coulomb { e2: 1.0 },
            Some(0),
            vec![-0.5, -0.125, -0.02],
        ),
        (
            PotentialModel::Coulomb { e2: 1.0 },
            Some(1),
            vec![-0.1, -0.05, -0.02],
        ),
        (
            PotentialModel::Coulomb { e2: 1.0 },
            Some(2),
            vec![-0.03, -0.02],
        ),
        (
            PotentialModel::Harmonic3D { omega: 1.0 },
            Some(0),
            vec![1.5, 3.5, 7.5],
        ),
        (
            PotentialModel::Harmonic3D { omega: 1.0 },
            Some(2),
            vec![4.5, 8.5],
        ),
        (
            PotentialModel::Morse {
                v0: 10.0,
                r0: 1.0,
                alpha: 1.0,
            },
            None,
            vec![-7.888, -4.4, -1.5],
        ),
        (
            PotentialModel::Morse {
                v0: 10.0,
                r0: 1.0,
                alpha: 1.0,
            },
            Some(0),
            vec![-6.027_864_045_000_42, -4.0, -2.0],
        ),
        (
            PotentialModel::Morse {
                v0: 10.0,
                r0: 1.0,
                alpha: 1.0,
            },
            Some(1),
            vec![-3.0, -1.5],
        ),
        (
            PotentialModel::Hulthen { v0: 8.0, r0: 1.0 },
            Some(0),
            vec![-28.125, -4.5, -0.6805555555555555],
        ),
        (
            PotentialModel::Hulthen { v0: 8.0, r0: 1.0 },
            Some(1),
            vec![-4.5, -0.6805555555555555],
        ),
    ]
}

fn closed_form_vs_quadrature(opts: &CheckOptions) -> CheckReport {
    let name = "quantize: closed-form vs quadrature phase integral ≤ 1e-8 (all four potentials)";
    let threshold = 1e-8f64.max(10.0 * opts.quad_tol);
    let mut worst: Vec<(String, f64)> = Vec::new();
    for (m, l, energies) in agreement_grid() {
        let (l, mode) = match l {
            Some(l) => (l, CentrifugalMode::Langer),
            None => (0, CentrifugalMode::None),
        };
        let mut max_dev = 0.0f64;
        for e in energies {
            let ctx = RadialContext::new(m, C, e, l, mode);
            let (Some(closed), Ok(quad)) = (
                closed_form_phase_integral(&ctx),
                phase_integral_with(&ctx, opts.quad_tol),
            ) else {
                continue;
            };
            if closed <= 0.0 {
                continue;
            }
            max_dev = max_dev.max((quad - closed).abs() / closed);
        }
        worst.push((format!("{}[{} l={}]", m.name(), mode.name(), l), max_dev));
    }
    let bad: Vec<String> = worst
        .iter()
        .filter(|(_, d)| *d > threshold)
        .map(|(n, d)| format!("{n}: {d:.2e}"))
        .collect();
    let detail = worst
        .iter()
        .map(|(n, d)| format!("{n}: {d:.2e}"))
        .collect::<Vec<_>>()
        .join(", ");
    if bad.is_empty() {
        CheckReport::pass(name, detail)
    } else {
        CheckReport::fail(
            name,
            format!(
                "analytic expressions are not the true integrals for: {}",
                bad.join("; ")
            ),
        )
    }
}

fn quantization_inversion_closed_form() -> CheckReport {
    let name = "quantize: closed-form spectra invert the closed-form phase integral";
    let mut worst = 0.0f64;
    for (m, n_r, l) in inversion_states() {
        let e = analytic_eigenvalue(&m, &C, n_r, l, CentrifugalMode::Langer).unwrap();
        let ctx = RadialContext::new(m, C, e, l, CentrifugalMode::Langer);
        let target = std::f64::consts::PI * (n_r as f64 + 0.5);
        let Some(i) = closed_form_phase_integral(&ctx) else {
            return CheckReport::fail(
                name,
                format!("{} n_r={n_r} l={l}: no closed form", m.name()),
            );
        };
        worst = worst.max((i - target).abs() / target);
    }
    CheckReport::from(
        name,
        worst <= 1e-12,
        format!("max relative residual {worst:.2e}"),
    )
}

fn inversion_states() -> Vec<(PotentialModel, u32, u32)> {
    vec![
        (PotentialModel::Coulomb { e2: 1.0 }, 0, 0),
        (PotentialModel::Coulomb { e2: 1.0 }, 1, 1),
        (PotentialModel::Coulomb { e2: 1.0 }, 2, 0),
        (PotentialModel::Harmonic3D { omega: 1.0 }, 0, 0),
        (PotentialModel::Harmonic3D { omega: 1.0 }, 1, 2),
        (
            PotentialModel::Morse {
                v0: 10.0,
                r0: 1.0,
                alpha: 1.0,
            },
            0,
            0,
        ),
        (
            PotentialModel::Morse {
                v0: 10.0,
                r0: 1.0,
                alpha: 1.0,
            },
            1,
            0,
        ),
        (PotentialModel::Hulthen { v0: 8.0, r0: 1.0 }, 0, 0),
        (PotentialModel::Hulthen { v0: 8.0, r0: 1.0 }, 1, 0),
        (PotentialModel::Hulthen { v0: 8.0, r0: 1.0 }, 0, 1),
    ]
}

fn quantization_inversion_quadrature(opts: &CheckOptions) -> CheckReport {
    let name =
        "quantize: closed-form spectra invert the quadrature phase integral (Langer; Morse via its Langer-route formula)";
    let threshold = 1e-8f64.max(10.0 * opts.quad_tol);
    let mut results = Vec::new();
    let mut bad = Vec::new();
    for (m, n_r, l) in inversion_states() {
        let e = analytic_eigenvalue(&m, &C, n_r, l, CentrifugalMode::Langer).unwrap();
        let ctx = RadialContext::new(m, C, e, l, CentrifugalMode::Langer);
        let target = std::f64::consts::PI * (n_r as f64 + 0.5);
        let dev = match phase_integral_with(&ctx, opts.quad_tol) {
            Ok(i) => (i - target).abs() / target,
            Err(err) => {
                return CheckReport::fail(name, format!("{} n_r={n_r} l={l}: {err}", m.name()))
            }
        };
        results.push(format!("{}(n_r={n_r},l={l}): {dev:.2e}", m.name()));
        if dev > threshold {
            bad.push(format!("{}(n_r={n_r},l={l}): {dev:.2e}", m.name()));
        }
    }
    if bad.is_empty() {
        CheckReport::pass(name, results.join(", "))
    } else {
        CheckReport::fail(
            name,
            format!("quadrature disagrees for: {}", bad.join("; ")),
        )
    }
}

fn negative_control(opts: &CheckOptions) -> CheckReport {
    let name = "quantize: Schrödinger-mode Coulomb is NOT exact (negative control)";
    let m = PotentialModel::Coulomb { e2: 1.0 };
    let solved = match solve_eigenvalue(m, &C, 0, 1, CentrifugalMode::Schrodinger, opts.root_tol) {
        Ok(q) => q.energy,
        Err(e) => return CheckReport::fail(name, format!("solve failed: {e}")),
    };
    let rel = (solved + 0.125).abs() / 0.125;
    if rel <= 1e-3 {
        return CheckReport::fail(name, format!("too close to exact: rel dev {rel:.2e}"));
    }
    for mode in [CentrifugalMode::Schrodinger, CentrifugalMode::None] {
        match solve_eigenvalue(m, &C, 0, 0, mode, opts.root_tol) {
            Err(Error::SingleTurningPoint) => {}
            other => {
                return CheckReport::fail(
                    name,
                    format!(
                        "l=0 {} expected SingleTurningPoint, got {other:?}",
                        mode.name()
                    ),
                )
            }
        }
    }
    CheckReport::pass(
        name,
        format!("l=1 rel dev {rel:.3e} > 1e-3; l=0 raises SingleTurningPoint in both plain modes"),
    )
}

fn degenerate_limit(opts: &CheckOptions) -> CheckReport {
    let name = "quantize: phase integral → 0 as E → min V_eff";
    let lambda = 1.5; // oscillator l=1 Langer: min V_eff = λω
    let mut prev = f64::INFINITY;
    for delta in [1e-2, 1e-4, 1e-6] {
        let ctx = RadialContext::new(
            PotentialModel::Harmonic3D { omega: 1.0 },
            C,
            lambda + delta,
            1,
            CentrifugalMode::Langer,
        );
        let i = match phase_integral_with(&ctx, opts.quad_tol) {
            Ok(v) => v,
            Err(e) => return CheckReport::fail(name, format!("E=min+{delta}: {e}")),
        };
        if i >= prev || i < 0.0 {
            return CheckReport::fail(name, format!("I not decreasing toward 0: {i} at δ={delta}"));
        }
        prev = i;
    }
    CheckReport::from(
        name,
        prev < 1e-5,
        format!("I(min V_eff + 1e-6) = {prev:.2e}"),
    )
}

fn angular_closed_form_identity(opts: &CheckOptions) -> CheckReport {
    let name = "angular: quadrature equals π(√M² − |M_z|) to 1e-9";
    let threshold = 1e-9f64.max(10.0 * opts.quad_tol);
    let mut worst = 0.0f64;
    let mut m2: f64 = 0.25;
    while m2 <= 400.0 {
        for frac in [0.0, 0.25, 0.5, 0.75, 0.95] {
            let m_z = frac * m2.sqrt();
            let ctx = AngularContext::new(m2, m_z, C);
            let closed = angular_phase_closed_form(&ctx).unwrap();
            let quad = match angular_phase_integral_with(&ctx, opts.quad_tol) {
                Ok(v) => v,
                Err(e) => return CheckReport::fail(name, format!("M²={m2} Mz={m_z}: {e}")),
            };
            let scale = std::f64::consts::PI * m2.sqrt();
            worst = worst.max((quad - closed).abs() / scale);
        }
        m2 *= 3.0;
    }
    CheckReport::from(
        name,
        worst <= threshold,
        format!("max scaled deviation {worst:.2e}"),
    )
}

fn angular_quantization(opts: &CheckOptions) -> CheckReport {
    let name = "angular: solve_m_squared equals (|m|+n_θ+½)²ħ² for n_θ, |m| ≤ 10";
    let threshold = 1e-8f64.max(10.0 * opts.root_tol);
    let mut worst = 0.0f64;
    for n_theta in 0..=10u32 {
        for m in -10i32..=10 {
            let got = match solve_m_squared(n_theta, m, &C, opts.root_tol) {
                Ok(v) => v,
                Err(e) => return CheckReport::fail(name, format!("n_θ={n_theta} m={m}: {e}")),
            };
            let l = m.unsigned_abs() + n_theta;
            let expected = (l as f64 + 0.5) * (l as f64 + 0.5);
            worst = worst.max((got - expected).abs() / expected);
        }
    }
    CheckReport::from(
        name,
        worst <= threshold,
        format!("231 states, max rel dev {worst:.2e}"),
    )
}

fn angular_symmetry_and_monotonicity(opts: &CheckOptions) -> CheckReport {
    let name = "angular: m-symmetry and monotonicity in M²";
    for (n_theta, m) in [(0u32, 4i32), (3, 7)] {
        let a = solve_m_squared(n_theta, m, &C, opts.root_tol).unwrap_or(f64::NAN);
        let b = solve_m_squared(n_theta, -m, &C, opts.root_tol).unwrap_or(f64::NAN);
        if a != b {
            return CheckReport::fail(name, format!("asymmetry at n_θ={n_theta}, |m|={m}"));
        }
    }
    let mut prev = -1.0;
    for m2 in [1.0, 4.0, 16.0, 64.0] {
        let i = angular_phase_integral_with(&AngularContext::new(m2, 1.0, C), opts.quad_tol)
            .unwrap_or(f64::NAN);
        if !(i > prev) {
            return CheckReport::fail(name, format!("not monotone at M²={m2}"));
        }
        prev = i;
    }
    CheckReport::pass(
        name,
        "solve(m) = solve(−m); I strictly increasing in M²".into(),
    )
}

fn boundary_exponents() -> CheckReport {
    let name = "wavefn: small-θ exponent of Θ̃/√sinθ fits |m| ± 0.05";
    let mut details = Vec::new();
    for (l, m) in [(1u32, 1i32), (3, 2), (5, 0)] {
        let slope = match wavefn::boundary_exponent(l, m, &C, (1e-3, 1e-2), 24) {
            Ok(s) => s,
            Err(e) => return CheckReport::fail(name, format!("(l={l},m={m}): {e}")),
        };
        if (slope - m.unsigned_abs() as f64).abs() > 0.05 {
            return CheckReport::fail(name, format!("(l={l},m={m}): slope {slope:.4}"));
        }
        details.push(format!("(l={l},m={m}): {slope:.4}"));
    }
    CheckReport::pass(name, details.join(", "))
}

fn norm_consistency() -> CheckReport {
    let name = "wavefn: |ψ̃|² = r² sinθ |ψ|² round-trip to 1e-12";
    let mut worst = 0.0f64;
    for (v, r, theta) in [(1.0, 2.0, 1.0), (-0.37, 0.5, 2.7), (5.5, 11.0, 0.3)] {
        let psi = wavefn::to_psi_representation(v, r, theta).unwrap();
        let back = wavefn::to_tilde_representation(psi, r, theta).unwrap();
        worst = worst.max((back - v).abs() / v.abs());
        let lhs = v * v;
        let rhs = r * r * theta.sin() * psi * psi;
        worst = worst.max((lhs - rhs).abs() / lhs.abs());
    }
    CheckReport::from(
        name,
        worst <= 1e-12,
        format!("max rel deviation {worst:.2e}"),
    )
}

fn asymptotic_match(opts: &CheckOptions) -> CheckReport {
    let name = "wavefn: WKB wave matches the normalized asymptote within 1% (l ≥ 5)";
    let _ = opts;
    let mut checked = 0usize;
    let mut worst = 0.0f64;
    // m = 0: p(θ) = (l+½)ħ everywhere, the far-from-turning-point condition
    // holds at every θ; add one large-l m=1 case at a phase peak near the
    // equator where |p − (l+½)ħ| < 1e-3 (l+½)ħ also holds.
    let mut cases: Vec<(u32, i32, Vec<f64>)> = vec![
        (5, 0, vec![0.5, 0.9, 1.3, 1.9, 2.4]),
        (7, 0, vec![0.4, 1.0, 1.6, 2.2]),
        (10, 0, vec![0.35, 0.8, 1.45, 2.1]),
    ];
    let peak = (14.75) * std::f64::consts::PI / 30.5;
    cases.push((30, 1, vec![peak]));
    for (l, m, thetas) in cases {
        let wave = wavefn::WkbAngularWave::new(l, m, C)
            .unwrap()
            .with_amplitude(wavefn::matched_amplitude(l, m, &C));
        let big_m = (l as f64 + 0.5) * C.hbar;
        for theta in thetas {
            let s = theta.sin();
            let p = (big_m * big_m - (m as f64 * C.hbar).powi(2) / (s * s))
                .max(0.0)
                .sqrt();
            if (p - big_m).abs() > 1e-3 * big_m {
                continue; // precondition: far from the turning points
            }
            let reference = wavefn::asymptotic_angular_value(l, m, theta);
            if reference.abs() < 0.1 * wavefn::asymptotic_prefactor(l, m) {
                continue; // skip near-zeros of the cosine
            }
            let got = match wavefn::wkb_angular_value(&wave, theta) {
                Ok(v) => v,
                Err(e) => return CheckReport::fail(name, format!("(l={l},m={m},θ={theta}): {e}")),
            };
            worst = worst.max((got - reference).abs() / reference.abs());
            checked += 1;
        }
    }
    CheckReport::from(
        name,
        worst <= 0.01 && checked >= 10,
        format!("{checked} samples, worst relative deviation {worst:.2e}"),
    )
}

fn quasiclassicality_trend(opts: &CheckOptions) -> CheckReport {
    let name = "wavefn: quasiclassicality ratio decreases with l at fixed relative position";
    let mut prev = f64::INFINITY;
    let mut details = Vec::new();
    for l in [1u32, 2, 5, 10] {
        let q = match solve_eigenvalue(
            PotentialModel::Coulomb { e2: 1.0 },
            &C,
            0,
            l,
            CentrifugalMode::Langer,
            opts.root_tol,
        ) {
            Ok(qr) => {
                let ctx = RadialContext::new(
                    PotentialModel::Coulomb { e2: 1.0 },
                    C,
                    qr.energy,
                    l,
                    CentrifugalMode::Langer,
                );
                let tp = qr.turning_points;
                let r = tp.r1 + 0.5 * (tp.r2 - tp.r1);
                match wavefn::quasiclassicality_ratio(&ctx, r) {
                    Ok(v) => v,
                    Err(e) => return CheckReport::fail(name, format!("l={l}: {e}")),
                }
            }
            Err(e) => return CheckReport::fail(name, format!("l={l}: {e}")),
        };
        if q >= prev {
            return CheckReport::fail(name, format!("ratio not decreasing at l={l}: {q}"));
        }
        details.push(format!("l={l}: {q:.3e}"));
        prev = q;
    }
    CheckReport::pass(name, details.join(", "))
}

fn oracle_convergence_order() -> CheckReport {
    let name = "oracle: eigenvalue error scales as h⁴ (slope 4 ± 0.3)";
    let m = PotentialModel::Coulomb { e2: 1.0 };
    let mut pts = Vec::new();
    for k in 0..4u32 {
        let points = 1000 * 2usize.pow(k) + 1;
        let grid = GridSpec {
            r_min: 1e-6,
            r_max: 30.0,
            points,
        };
        let h = grid.spacing();
        let r = match oracle::numerov_eigenvalue(&m, &C, 0, 0, &grid, tol::ORACLE_E_REL_TOL) {
            Ok(r) => r,
            Err(e) => return CheckReport::fail(name, format!("points={points}: {e}")),
        };
        let err = (r.energy + 0.5).abs();
        if r.nodes != 0 {
            return CheckReport::fail(name, format!("points={points}: wrong node count"));
        }
        pts.push((h.ln(), err.max(1e-300).ln()));
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CheckReport::from(
        name,
        (slope - 4.0).abs() <= 0.3,
        format!("fitted order {slope:.3} over three grid doublings"),
    )
}

fn oracle_case(
    name: &'static str,
    m: PotentialModel,
    n_r: u32,
    l: u32,
    expected: f64,
    tolerance: f64,
) -> std::result::Result<String, CheckReport> {
    let grid = oracle::default_grid(&m, &C, n_r, l)
        .map_err(|e| CheckReport::fail(name, format!("{}: grid: {e}", m.name())))?;
    let r = oracle::numerov_eigenvalue(&m, &C, n_r, l, &grid, tol::ORACLE_E_REL_TOL)
        .map_err(|e| CheckReport::fail(name, format!("{}: {e}", m.name())))?;
    let dev = (r.energy - expected).abs();
    if dev > tolerance {
        return Err(CheckReport::fail(
            name,
            format!(
                "{} (n_r={n_r},l={l}): |{:.9} − {expected}| = {dev:.2e}",
                m.name(),
                r.energy
            ),
        ));
    }
    if r.nodes != n_r {
        return Err(CheckReport::fail(
            name,
            format!("{}: node count {}", m.name(), r.nodes),
        ));
    }
    Ok(format!("{}(n_r={n_r},l={l}): {dev:.1e}", m.name()))
}

fn oracle_vs_closed_forms() -> CheckReport {
    let name = "oracle: matches the exact spectra of Coulomb/oscillator/Hulthén within 1e-6";
    let cases: [(PotentialModel, u32, u32, f64); 4] = [
        (PotentialModel::Coulomb { e2: 1.0 }, 0, 0, -0.5),
        (PotentialModel::Harmonic3D { omega: 1.0 }, 0, 0, 1.5),
        // ħω(2n_r + l + 3/2)
        (PotentialModel::Harmonic3D { omega: 1.0 }, 1, 1, 4.5),
        (PotentialModel::Hulthen { v0: 8.0, r0: 1.0 }, 0, 0, -28.125),
    ];
    let mut details = Vec::new();
    for (m, n_r, l, expected) in cases {
        match oracle_case(name, m, n_r, l, expected, 1e-6) {
            Ok(d) => details.push(d),
            Err(report) => return report,
        }
    }
    CheckReport::pass(name, details.join(", "))
}

fn oracle_vs_morse_closed_form() -> CheckReport {
    // The half-line Dirichlet boundary at r = 0 shifts the Morse ground
    // state away from the full-line closed form by e^(−2∫κ) ≈ 5e-3 at these
    // parameters, which this threshold does not admit; the check quantifies
    // the shift.
    let name = "oracle: matches the full-line Morse closed form at l=0 within 1e-5";
    let m = PotentialModel::Morse {
        v0: 10.0,
        r0: 1.0,
        alpha: 1.0,
    };
    match oracle_case(name, m, 0, 0, -7.888_932_022_500_21, 1e-5) {
        Ok(d) => CheckReport::pass(name, d),
        Err(report) => report,
    }
}

fn oracle_orthogonality() -> CheckReport {
    let name = "oracle: distinct eigenfunctions orthogonal below 1e-4";
    let m = PotentialModel::Coulomb { e2: 1.0 };
    let grid = match oracle::default_grid(&m, &C, 2, 0) {
        Ok(g) => g,
        Err(e) => return CheckReport::fail(name, format!("grid: {e}")),
    };
    let mut energies = Vec::new();
    for n_r in 0..3u32 {
        match oracle::numerov_eigenvalue(&m, &C, n_r, 0, &grid, tol::ORACLE_E_REL_TOL) {
            Ok(r) => energies.push(r.energy),
            Err(e) => return CheckReport::fail(name, format!("n_r={n_r}: {e}")),
        }
    }
    let waves: Vec<Vec<f64>> = energies
        .iter()
        .map(|&e| oracle::numerov_wavefunction(&m, &C, e, 0, &grid).unwrap())
        .collect();
    let h = grid.spacing();
    let mut worst = 0.0f64;
    for i in 0..waves.len() {
        for j in i + 1..waves.len() {
            let overlap: f64 = waves[i].iter().zip(&waves[j]).map(|(a, b)| a * b * h).sum();
            worst = worst.max(overlap.abs());
        }
    }
    CheckReport::from(name, worst < 1e-4, format!("max |overlap| = {worst:.2e}"))
}

fn csv_determinism(opts: &CheckOptions) -> CheckReport {
    let name = "cli: CSV output is byte-identical across runs";
    let make = || -> SpectrumTable {
        spectrum(
            PotentialModel::Coulomb { e2: 1.0 },
            &C,
            1,
            1,
            CentrifugalMode::Langer,
            opts.root_tol,
        )
    };
    let a = make().to_csv();
    let b = make().to_csv();
    CheckReport::from(name, a == b && !a.is_empty(), format!("{} bytes", a.len()))
}

fn json_round_trip(opts: &CheckOptions) -> CheckReport {
    let name = "cli: JSON tables round-trip exactly";
    let t = spectrum(
        PotentialModel::Hulthen { v0: 8.0, r0: 1.0 },
        &C,
        3,
        0,
        CentrifugalMode::Langer,
        opts.root_tol,
    );
    match serde_json::from_str::<SpectrumTable>(&t.to_json()) {
        Ok(back) => CheckReport::from(name, back == t, "parse(emit(x)) == x".into()),
        Err(e) => CheckReport::fail(name, format!("{e}")),
    }
}
