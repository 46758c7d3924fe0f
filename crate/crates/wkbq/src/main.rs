//! Command-line front end: spectrum tables, WKB-vs-oracle comparisons,
//! angular eigenvalue checks, wavefunction sampling, and the invariant
//! self-test suite. Data goes to stdout (or --output), diagnostics to
//! stderr. Exit codes: 0 success, 1 usage error, 2 numeric failure,
//! 3 partial results (rows without bound states).

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use wkbq::angular;
use wkbq::check::{run_all, CheckOptions};
use wkbq::potentials::{CentrifugalMode, PhysicalConstants, PotentialModel};
use wkbq::spectrum::{augment_with_oracle, format_f64, spectrum};
use wkbq::tol;
use wkbq::wavefn;

#[derive(Parser)]
#[command(
    name = "wkbq",
    version,
    about = "Semiclassical bound-state quantization for spherically symmetric potentials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// WKB eigenvalue table over an (n_r, l) grid, with closed-form references
    Spectrum(SpectrumArgs),
    /// Spectrum plus the independent Numerov oracle column
    Compare(CompareArgs),
    /// Angular quantization: numeric M² against (|m|+n_θ+½)²ħ²
    Angular(AngularArgs),
    /// Sample WKB wavefunctions (angular, asymptotic, or radial standing wave)
    Wavefn(WavefnArgs),
    /// Run the invariant self-test suite; exit 0 iff every check passes
    Check(CheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    None,
    Schrodinger,
    Langer,
}

impl From<ModeArg> for CentrifugalMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::None => CentrifugalMode::None,
            ModeArg::Schrodinger => CentrifugalMode::Schrodinger,
            ModeArg::Langer => CentrifugalMode::Langer,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct PotentialArgs {
    /// coulomb | harmonic | morse | hulthen
    #[arg(long)]
    potential: String,
    /// Coulomb coupling (V = −e²/r)
    #[arg(long)]
    e2: Option<f64>,
    /// Oscillator angular frequency (V = ½mω²r²)
    #[arg(long)]
    omega: Option<f64>,
    /// Well depth of the Morse / Hulthén potential
    #[arg(long = "V0")]
    v0: Option<f64>,
    /// Equilibrium radius (Morse) / screening length (Hulthén)
    #[arg(long)]
    r0: Option<f64>,
    /// Morse steepness
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
}

impl PotentialArgs {
    fn build(&self) -> Result<(PotentialModel, PhysicalConstants), String> {
        let model = match self.potential.as_str() {
            "coulomb" => PotentialModel::Coulomb {
                e2: self.e2.ok_or("coulomb requires --e2")?,
            },
            "harmonic" => PotentialModel::Harmonic3D {
                omega: self.omega.ok_or("harmonic requires --omega")?,
            },
            "morse" => PotentialModel::Morse {
                v0: self.v0.ok_or("morse requires --V0")?,
                r0: self.r0.ok_or("morse requires --r0")?,
                alpha: self.alpha.ok_or("morse requires --alpha")?,
            },
            "hulthen" => PotentialModel::Hulthen {
                v0: self.v0.ok_or("hulthen requires --V0")?,
                r0: self.r0.ok_or("hulthen requires --r0")?,
            },
            other => return Err(format!("unknown potential '{other}'")),
        };
        let constants = PhysicalConstants {
            hbar: self.hbar,
            mass: self.mass,
        };
        model.validate().map_err(|e| e.to_string())?;
        constants.validate().map_err(|e| e.to_string())?;
        Ok((model, constants))
    }
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    pot: PotentialArgs,
    #[arg(long, value_enum, default_value = "langer")]
    mode: ModeArg,
    /// Largest radial quantum number (inclusive)
    #[arg(long = "nr-max")]
    nr_max: u32,
    /// Largest angular momentum (inclusive)
    #[arg(long = "l-max")]
    l_max: u32,
    /// Quantization-residual tolerance relative to πħ
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Write the table here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    spectrum: SpectrumArgs,
    /// Override the oracle grid resolution (default 20001 points)
    #[arg(long = "grid-points")]
    grid_points: Option<usize>,
    /// Oracle bisection tolerance (relative)
    #[arg(long = "oracle-tol")]
    oracle_tol: Option<f64>,
}

#[derive(Args)]
struct AngularArgs {
    #[arg(long = "n-theta")]
    n_theta: u32,
    #[arg(long, allow_hyphen_values = true)]
    m: i32,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum WaveKind {
    /// Θ̃ = A/√|p| · cos(∫√p² dθ/ħ − π/4) on the allowed interval
    Angular,
    /// the normalized large-l asymptote of the angular wave
    Asymptotic,
    /// radial standing wave A·cos(p_n r/ħ − χ₁ − π/4)
    Radial,
}

#[derive(Args)]
struct WavefnArgs {
    #[arg(long, value_enum)]
    kind: WaveKind,
    #[arg(long, required_if_eq_any([("kind", "angular"), ("kind", "asymptotic")]))]
    l: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i32>,
    /// Momentum √(2m|E_n|) for the radial standing wave
    #[arg(long = "p-n")]
    p_n: Option<f64>,
    /// Phase offset χ₁ for the radial standing wave
    #[arg(long, default_value_t = 0.0)]
    chi1: f64,
    #[arg(long, default_value_t = 1.0)]
    amplitude: f64,
    #[arg(long = "r-min")]
    r_min: Option<f64>,
    #[arg(long = "r-max")]
    r_max: Option<f64>,
    #[arg(long, default_value_t = 64)]
    samples: usize,
    /// Convert angular values to the ψ representation (divide by √sin θ)
    #[arg(long)]
    psi: bool,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Quadrature refinement tolerance (default 1e-11; env WKB_TOL_QUAD)
    #[arg(long = "tol-quad")]
    tol_quad: Option<f64>,
    /// Quantization-residual tolerance (default 1e-10; env WKB_TOL_ROOT)
    #[arg(long = "tol-root")]
    tol_root: Option<f64>,
}

fn env_tol(name: &str, default: f64) -> f64 {
    std::env::var(name)
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .filter(|v| *v > 0.0)
        .unwrap_or(default)
}

fn quad_tol_default() -> f64 {
    env_tol("WKB_TOL_QUAD", tol::QUAD_REL_TOL)
}

fn root_tol_default() -> f64 {
    env_tol("WKB_TOL_ROOT", tol::ROOT_REL_TOL)
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("writing {path:?}: {e}")),
        None => {
            print!("{text}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version are not usage errors
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let code = match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args, false, None, None),
        Command::Compare(args) => {
            cmd_spectrum(args.spectrum, true, args.grid_points, args.oracle_tol)
        }
        Command::Angular(args) => cmd_angular(args),
        Command::Wavefn(args) => cmd_wavefn(args),
        Command::Check(args) => cmd_check(args),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn cmd_spectrum(
    args: SpectrumArgs,
    with_oracle: bool,
    grid_points: Option<usize>,
    oracle_tol: Option<f64>,
) -> Result<u8, String> {
    let (model, constants) = args.pot.build()?;
    let tol_rel = args.tol.unwrap_or_else(root_tol_default);
    if !(tol_rel > 0.0) {
        return Err("--tol must be positive".into());
    }
    let mode: CentrifugalMode = args.mode.into();
    let mut table = spectrum(model, &constants, args.nr_max, args.l_max, mode, tol_rel);
    if with_oracle {
        augment_with_oracle(
            &mut table,
            model,
            &constants,
            grid_points,
            oracle_tol.unwrap_or(tol::ORACLE_E_REL_TOL),
        );
    }
    let text = match args.format {
        FormatArg::Csv => table.to_csv(),
        FormatArg::Json => {
            let mut s = table.to_json();
            s.push('\n');
            s
        }
    };
    emit(&text, &args.output)?;
    for row in &table.rows {
        if row.status != wkbq::spectrum::RowStatus::Ok {
            eprintln!("note: n_r={} l={}: {}", row.n_r, row.l, row.status.as_str());
        }
    }
    Ok(table.exit_code() as u8)
}

fn cmd_angular(args: AngularArgs) -> Result<u8, String> {
    let constants = PhysicalConstants {
        hbar: args.hbar,
        mass: 1.0,
    };
    constants.validate().map_err(|e| e.to_string())?;
    let tol_rel = args.tol.unwrap_or_else(root_tol_default);
    let analytic = angular::angular_momentum_eigenvalue(args.n_theta, args.m, &constants);
    let numeric = match angular::solve_m_squared(args.n_theta, args.m, &constants, tol_rel) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
    };
    let rel_dev = (numeric - analytic.m_squared).abs() / analytic.m_squared;
    let agree = rel_dev <= 1e-8f64.max(10.0 * tol_rel);
    match args.format {
        FormatArg::Csv => {
            println!("n_theta,m,l,M2_numeric,M2_analytic,rel_dev,agreement");
            println!(
                "{},{},{},{},{},{},{}",
                args.n_theta,
                args.m,
                analytic.l,
                format_f64(numeric),
                format_f64(analytic.m_squared),
                format_f64(rel_dev),
                agree
            );
        }
        FormatArg::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "n_theta": args.n_theta,
                    "m": args.m,
                    "l": analytic.l,
                    "m2_numeric": numeric,
                    "m2_analytic": analytic.m_squared,
                    "rel_dev": rel_dev,
                    "agreement": agree,
                })
            );
        }
    }
    Ok(if agree { 0 } else { 2 })
}

fn sample_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| a + (b - a) * (i as f64 + 0.5) / n as f64)
        .collect()
}

fn cmd_wavefn(args: WavefnArgs) -> Result<u8, String> {
    if args.samples == 0 {
        return Err("--samples must be positive".into());
    }
    let constants = PhysicalConstants {
        hbar: args.hbar,
        mass: 1.0,
    };
    constants.validate().map_err(|e| e.to_string())?;
    let mut lines = String::new();
    let mut failures = 0usize;
    match args.kind {
        WaveKind::Angular | WaveKind::Asymptotic => {
            let l = args.l.ok_or("--l is required for angular kinds")?;
            let m = args.m.unwrap_or(0);
            if args.p_n.is_some() {
                return Err("--p-n applies only to --kind radial".into());
            }
            lines.push_str("theta,value\n");
            let (lo, hi) = if matches!(args.kind, WaveKind::Angular) {
                // sample strictly inside the classically allowed interval
                let theta1 = if m == 0 {
                    0.0
                } else {
                    (m.unsigned_abs() as f64 / (l as f64 + 0.5)).asin()
                };
                let margin = 1e-3 * (std::f64::consts::PI - 2.0 * theta1);
                (theta1 + margin, std::f64::consts::PI - theta1 - margin)
            } else {
                (1e-3, std::f64::consts::PI - 1e-3)
            };
            let wave = match args.kind {
                WaveKind::Angular => Some(
                    wavefn::WkbAngularWave::new(l, m, constants)
                        .map_err(|e| e.to_string())?
                        .with_amplitude(args.amplitude),
                ),
                _ => None,
            };
            for theta in sample_grid(lo, hi, args.samples) {
                let value = match args.kind {
                    WaveKind::Angular => {
                        match wavefn::wkb_angular_value(wave.as_ref().unwrap(), theta) {
                            Ok(v) => v,
                            Err(_) => {
                                failures += 1;
                                continue; // singular endpoints excluded
                            }
                        }
                    }
                    _ => args.amplitude * wavefn::asymptotic_angular_value(l, m, theta),
                };
                let value = if args.psi {
                    match wavefn::to_psi_angular(value, theta) {
                        Ok(v) => v,
                        Err(_) => {
                            failures += 1;
                            continue;
                        }
                    }
                } else {
                    value
                };
                lines.push_str(&format!("{},{}\n", format_f64(theta), format_f64(value)));
            }
        }
        WaveKind::Radial => {
            if args.psi {
                return Err("--psi applies only to angular kinds".into());
            }
            let p_n = args.p_n.ok_or("--p-n is required for --kind radial")?;
            let wave = wavefn::RadialStandingWave::new(p_n, args.chi1, constants)
                .map_err(|e| e.to_string())?
                .with_amplitude(args.amplitude);
            let r_min = args.r_min.unwrap_or(0.0);
            let r_max = args
                .r_max
                .unwrap_or(4.0 * std::f64::consts::PI * constants.hbar / p_n);
            if !(r_max > r_min) {
                return Err("need r-max > r-min".into());
            }
            lines.push_str("r,value\n");
            for r in sample_grid(r_min, r_max, args.samples) {
                lines.push_str(&format!(
                    "{},{}\n",
                    format_f64(r),
                    format_f64(wave.value(r))
                ));
            }
        }
    }
    let text = match args.format {
        FormatArg::Csv => lines,
        FormatArg::Json => {
            let rows: Vec<serde_json::Value> = lines
                .lines()
                .skip(1)
                .map(|line| {
                    let mut it = line.split(',');
                    let x: f64 = it.next().unwrap().parse().unwrap();
                    let v: f64 = it.next().unwrap().parse().unwrap();
                    serde_json::json!({"x": x, "value": v})
                })
                .collect();
            format!("{}\n", serde_json::json!({ "samples": rows }))
        }
    };
    emit(&text, &args.output)?;
    if failures > 0 {
        eprintln!("note: {failures} samples near turning points were skipped");
    }
    Ok(0)
}

fn cmd_check(args: CheckArgs) -> Result<u8, String> {
    let opts = CheckOptions {
        quad_tol: args.tol_quad.unwrap_or_else(quad_tol_default),
        root_tol: args.tol_root.unwrap_or_else(root_tol_default),
    };
    if !(opts.quad_tol > 0.0 && opts.root_tol > 0.0) {
        return Err("tolerances must be positive".into());
    }
    let reports = run_all(&opts);
    let mut all_ok = true;
    for r in &reports {
        let tag = if r.passed { "ok  " } else { "FAIL" };
        println!("{tag}  {} — {}", r.name, r.detail);
        all_ok &= r.passed;
    }
    let (passed, total) = (reports.iter().filter(|r| r.passed).count(), reports.len());
    eprintln!("{passed}/{total} checks passed");
    Ok(if all_ok { 0 } else { 2 })
}
