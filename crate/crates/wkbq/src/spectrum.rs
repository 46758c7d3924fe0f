//! Spectrum tables: batch eigenvalue computation over (n_r, l) grids, with
//! WKB, closed-form, and oracle columns, and deterministic CSV/JSON output.

use crate::error::Error;
use crate::oracle;
use crate::potentials::{analytic_eigenvalue, CentrifugalMode, PhysicalConstants, PotentialModel};
use crate::quantize;
use serde::{Deserialize, Serialize};

/// Per-row outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Ok,
    NoBoundState,
    NoAnalytic,
    OracleFailed,
    /// A numeric failure other than the absence of a bound state; drives
    /// exit code 2 in the CLI.
    Failed,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::NoBoundState => "no-bound-state",
            RowStatus::NoAnalytic => "no-analytic",
            RowStatus::OracleFailed => "oracle-failed",
            RowStatus::Failed => "failed",
        }
    }
}

/// One (n_r, l) entry of a spectrum table.
///
/// `abs_err`/`rel_err` compare `e_wkb` against the reference column:
/// the closed-form value when present, otherwise the oracle value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub n_r: u32,
    pub l: u32,
    pub e_wkb: Option<f64>,
    pub e_analytic: Option<f64>,
    pub e_oracle: Option<f64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub status: RowStatus,
}

impl SpectrumRow {
    fn recompute_errors(&mut self) {
        let reference = self.e_analytic.or(self.e_oracle);
        (self.abs_err, self.rel_err) = match (self.e_wkb, reference) {
            (Some(w), Some(r)) => {
                let abs = (w - r).abs();
                let rel = if r != 0.0 {
                    abs / r.abs()
                } else {
                    f64::INFINITY
                };
                (Some(abs), Some(rel))
            }
            _ => (None, None),
        };
    }
}

/// A spectrum table: the model/mode identification plus ordered rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumTable {
    pub potential: String,
    pub mode: String,
    pub rows: Vec<SpectrumRow>,
}

/// Compute WKB + closed-form rows for every requested (n_r, l) pair, in the
/// order given. Per-row failures are recorded in the row, never dropped.
pub fn spectrum_over(
    model: PotentialModel,
    constants: &PhysicalConstants,
    pairs: impl IntoIterator<Item = (u32, u32)>,
    mode: CentrifugalMode,
    tol_rel: f64,
) -> SpectrumTable {
    let mut rows = Vec::new();
    for (n_r, l) in pairs {
        let analytic = analytic_eigenvalue(&model, constants, n_r, l, mode);
        let (e_wkb, status) =
            match quantize::solve_eigenvalue(model, constants, n_r, l, mode, tol_rel) {
                Ok(q) => (Some(q.energy), RowStatus::Ok),
                Err(Error::NoBoundState { .. }) => (None, RowStatus::NoBoundState),
                Err(_) => (None, RowStatus::Failed),
            };
        let status = match (status, analytic) {
            (RowStatus::Ok, None) => RowStatus::NoAnalytic,
            (s, _) => s,
        };
        let mut row = SpectrumRow {
            n_r,
            l,
            e_wkb,
            e_analytic: analytic,
            e_oracle: None,
            abs_err: None,
            rel_err: None,
            status,
        };
        row.recompute_errors();
        rows.push(row);
    }
    SpectrumTable {
        potential: model.name().to_string(),
        mode: mode.name().to_string(),
        rows,
    }
}

/// Rows for the full grid n_r ∈ [0, n_r_max], l ∈ [0, l_max], ordered by
/// (l, n_r).
pub fn spectrum(
    model: PotentialModel,
    constants: &PhysicalConstants,
    n_r_max: u32,
    l_max: u32,
    mode: CentrifugalMode,
    tol_rel: f64,
) -> SpectrumTable {
    let pairs = (0..=l_max).flat_map(|l| (0..=n_r_max).map(move |n_r| (n_r, l)));
    spectrum_over(model, constants, pairs, mode, tol_rel)
}

/// Fill the oracle column of an existing table (used by `compare`): one
/// Numerov solve per row on that row's default grid. Oracle failures are
/// flagged per row.
pub fn augment_with_oracle(
    table: &mut SpectrumTable,
    model: PotentialModel,
    constants: &PhysicalConstants,
    grid_points: Option<usize>,
    tol_e: f64,
) {
    for row in &mut table.rows {
        if row.status == RowStatus::NoBoundState {
            continue;
        }
        let solved =
            oracle::default_grid(&model, constants, row.n_r, row.l).and_then(|mut grid| {
                if let Some(p) = grid_points {
                    grid.points = p;
                    grid.validate()?;
                }
                oracle::numerov_eigenvalue(
                    &model,
                    constants,
                    row.n_r,
                    row.l,
                    &grid,
                    crate::tol::ORACLE_E_REL_TOL.max(tol_e),
                )
            });
        match solved {
            Ok(r) => {
                row.e_oracle = Some(r.energy);
                row.recompute_errors();
            }
            Err(_) => {
                row.e_oracle = None;
                if row.status == RowStatus::Ok || row.status == RowStatus::NoAnalytic {
                    row.status = RowStatus::OracleFailed;
                }
            }
        }
    }
}

/// Fixed 17-significant-digit decimal formatting: identical inputs yield
/// byte-identical output.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn format_opt(x: Option<f64>) -> String {
    x.map(format_f64).unwrap_or_default()
}

pub const CSV_HEADER: &str =
    "potential,mode,n_r,l,E_wkb,E_analytic,E_oracle,abs_err,rel_err,status";

impl SpectrumTable {
    /// Deterministic CSV with the fixed column order
    /// potential,mode,n_r,l,E_wkb,E_analytic,E_oracle,abs_err,rel_err,status.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                self.potential,
                self.mode,
                r.n_r,
                r.l,
                format_opt(r.e_wkb),
                format_opt(r.e_analytic),
                format_opt(r.e_oracle),
                format_opt(r.abs_err),
                format_opt(r.rel_err),
                r.status.as_str(),
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum tables are always serializable")
    }

    /// Suggested process exit code: 0 all ok, 2 any numeric failure,
    /// 3 partial results (some rows without bound states).
    pub fn exit_code(&self) -> i32 {
        if self
            .rows
            .iter()
            .any(|r| matches!(r.status, RowStatus::Failed | RowStatus::OracleFailed))
        {
            2
        } else if self
            .rows
            .iter()
            .any(|r| r.status == RowStatus::NoBoundState)
        {
            3
        } else {
            0
        }
    }
}
