//! Independent ground truth: a fourth-order Numerov shooting solver for the
//! radial Schrödinger equation
//!
//!   U''(r) = [ l(l+1)/r² + (2m/ħ²)(V(r) − E) ] U(r),
//!
//! with the regular inner boundary U ∝ r^(l+1) and a decaying outer
//! boundary. Eigenvalues are found by bisection driven by interior node
//! counting, refined by matching the outward and inward sweeps at the outer
//! turning point through a Numerov-consistent discriminant. Nothing here
//! shares code with the WKB machinery it adjudicates — the only contact is
//! that the *default grid extent* is sized from a coarse WKB estimate of the
//! outer turning point.

use crate::error::{Error, Result};
use crate::potentials::{CentrifugalMode, PhysicalConstants, PotentialModel};
use crate::quantize::{self, RadialContext};
use crate::rootfind;
use crate::tol;

/// A uniform radial grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub r_min: f64,
    pub r_max: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn new(r_min: f64, r_max: f64, points: usize) -> Result<Self> {
        let g = Self {
            r_min,
            r_max,
            points,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r_min > 0.0 && self.r_max > self.r_min) {
            return Err(Error::InvalidParameter {
                what: "grid needs 0 < r_min < r_max",
            });
        }
        if self.points < 1000 {
            return Err(Error::InvalidParameter {
                what: "grid needs at least 1000 points",
            });
        }
        Ok(())
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.points - 1) as f64
    }
}

/// A converged oracle eigenvalue.
#[derive(Debug, Clone, Copy)]
pub struct OracleResult {
    pub energy: f64,
    /// Interior node count of the eigenfunction; equals the requested n_r.
    pub nodes: u32,
    pub grid: GridSpec,
    /// Richardson estimate |E_fine − E_coarse| / 15 from a half-resolution
    /// companion solve (fourth-order scheme).
    pub estimated_error: f64,
}

/// Precomputed Numerov coefficients on a grid for one (model, l).
struct Shooter {
    r: Vec<f64>,
    /// Energy-independent part of f(r): l(l+1)/r² + (2m/ħ²) V(r).
    v_part: Vec<f64>,
    /// 2m/ħ².
    k: f64,
    h: f64,
    l: u32,
    /// Laurent fit V(r) ≈ v₋₁/r + v₀ near the origin, for the series start.
    v_m1: f64,
    v_0: f64,
}

struct Sweep {
    /// Sign changes of the outward solution over the whole grid (hard-wall
    /// window structure; drives the bisection).
    nodes: u32,
    /// Sign changes inside the classically allowed region only — the
    /// physical node count, stable in the immediate neighborhood of an
    /// eigenvalue where the far tail can flip spuriously.
    nodes_interior: u32,
    /// Discrete Wronskian of the outward and inward sweeps at the matching
    /// point. It is conserved by the three-term recurrence, vanishes exactly
    /// at eigenvalues of the discrete scheme, and has no spurious zeros or
    /// poles; `None` when no classically allowed region exists.
    wronskian: Option<f64>,
    i_match: usize,
    /// False when the classically allowed region oscillates faster than the
    /// grid resolves (h√|f| ≳ 1.5); such trial energies are far below any
    /// eigenvalue the grid was built for and are treated as "too low".
    resolved: bool,
}

impl Sweep {
    /// Is the trial energy below the n_r-th eigenvalue? Valid throughout the
    /// node-count window: the Wronskian changes sign exactly once there, at
    /// the eigenvalue, with orientation (−1)^n_r (the inward sweep starts
    /// positive while the eigenfunction's outer lobe carries (−1)^n_r).
    fn below(&self, n_r: u32) -> bool {
        if !self.resolved {
            return true;
        }
        let Some(w) = self.wronskian else { return true };
        if self.nodes != n_r {
            return self.nodes < n_r;
        }
        let orientation = if n_r.is_multiple_of(2) { 1.0 } else { -1.0 };
        w * orientation > 0.0
    }
}

impl Shooter {
    fn new(
        model: &PotentialModel,
        constants: &PhysicalConstants,
        l: u32,
        grid: &GridSpec,
    ) -> Result<Self> {
        let h = grid.spacing();
        let n = grid.points;
        let k = 2.0 * constants.mass / (constants.hbar * constants.hbar);
        let lf = l as f64;
        let mut r = Vec::with_capacity(n);
        let mut v_part = Vec::with_capacity(n);
        for i in 0..n {
            let ri = grid.r_min + i as f64 * h;
            let v = model.evaluate(constants, ri)?;
            r.push(ri);
            v_part.push(lf * (lf + 1.0) / (ri * ri) + k * v);
        }
        // two-point Laurent fit of the potential's origin behavior,
        // V ≈ v₋₁/r + v₀, used by the series start of the outward sweep
        let (ra, rb) = (grid.r_min, 2.0 * grid.r_min);
        let (va, vb) = (
            model.evaluate(constants, ra)?,
            model.evaluate(constants, rb)?,
        );
        let v_m1 = (va - vb) / (1.0 / ra - 1.0 / rb);
        let v_0 = va - v_m1 / ra;
        Ok(Self {
            r,
            v_part,
            k,
            h,
            l,
            v_m1,
            v_0,
        })
    }

    #[inline]
    fn f(&self, i: usize, e: f64) -> f64 {
        self.v_part[i] - self.k * e
    }

    /// Largest grid index that is classically allowed (f < 0), or None when
    /// the allowed region is absent or too close to the inner edge to match
    /// on.
    fn match_index(&self, e: f64) -> Option<usize> {
        let n = self.r.len();
        let i = (0..n).rev().find(|&i| self.f(i, e) < 0.0)?;
        if i < 2 {
            return None;
        }
        Some(i.min(n - 3))
    }

    /// Outward Numerov sweep up to and including `stop`, renormalized to
    /// avoid overflow. Returns the solution values.
    ///
    /// Starts on the regular small-r series U ∝ r^(l+1)(1 + c₁r + c₂r²):
    /// the bare power law leaves an O(h) slope error at the second grid
    /// point, which would put an O(h) floor under the otherwise O(h⁴)
    /// eigenvalue. The coefficients follow from the indicial recursion with
    /// f(r) = l(l+1)/r² + g₋₁/r + g₀ + …
    fn sweep_out(&self, e: f64, stop: usize) -> Vec<f64> {
        let h2 = self.h * self.h;
        let mut u = vec![0.0; stop + 1];
        let lf = self.l as f64;
        let g_m1 = self.k * self.v_m1;
        let g_0 = self.k * (self.v_0 - e);
        let c1 = g_m1 / (2.0 * (lf + 1.0));
        let c2 = (g_m1 * c1 + g_0) / (2.0 * (2.0 * lf + 3.0));
        let series = |r: f64| 1.0 + c1 * r + c2 * r * r;
        u[0] = 1.0;
        if stop >= 1 {
            let p = lf + 1.0;
            u[1] = (self.r[1] / self.r[0]).powf(p) * series(self.r[1]) / series(self.r[0]);
        }
        for i in 1..stop {
            let fm = self.f(i - 1, e);
            let fi = self.f(i, e);
            let fp = self.f(i + 1, e);
            u[i + 1] = (2.0 * (1.0 + 5.0 * h2 * fi / 12.0) * u[i]
                - (1.0 - h2 * fm / 12.0) * u[i - 1])
                / (1.0 - h2 * fp / 12.0);
            if u[i + 1].abs() > 1e200 {
                let s = u[i + 1].abs();
                for v in u[..=i + 1].iter_mut() {
                    *v /= s;
                }
            }
        }
        u
    }

    /// Inward Numerov sweep from the outer edge down to and including
    /// `stop`, started on the local WKB decay (with amplitude factor).
    /// Indexed like the grid.
    fn sweep_in(&self, e: f64, stop: usize) -> Vec<f64> {
        let n = self.r.len();
        let h2 = self.h * self.h;
        let mut u = vec![0.0; n];
        let ka = self.f(n - 1, e).max(0.0).sqrt();
        let kb = self.f(n - 2, e).max(0.0).sqrt();
        let amplitude = if kb > 0.0 { (ka / kb).sqrt() } else { 1.0 };
        u[n - 1] = 1.0;
        u[n - 2] = amplitude * (0.5 * (ka + kb) * self.h).exp();
        for i in (stop + 1..n - 1).rev() {
            let fp = self.f(i + 1, e);
            let fi = self.f(i, e);
            let fm = self.f(i - 1, e);
            u[i - 1] = (2.0 * (1.0 + 5.0 * h2 * fi / 12.0) * u[i]
                - (1.0 - h2 * fp / 12.0) * u[i + 1])
                / (1.0 - h2 * fm / 12.0);
            if u[i - 1].abs() > 1e200 {
                let s = u[i - 1].abs();
                for v in u[i - 1..].iter_mut() {
                    *v /= s;
                }
            }
        }
        u
    }

    /// One full shot at energy e: the node count of the outward solution
    /// over the whole grid plus the matching Wronskian at the outer turning
    /// point.
    fn shoot(&self, e: f64) -> Sweep {
        let n = self.r.len();
        let h2 = self.h * self.h;
        let Some(m) = self.match_index(e) else {
            return Sweep {
                nodes: 0,
                nodes_interior: 0,
                wronskian: None,
                i_match: 0,
                resolved: true,
            };
        };
        // Guard against trial energies the grid cannot resolve: when
        // h²·k·|E| approaches 12 the Numerov denominators 1 − h²f/12 cross
        // zero somewhere on the grid and the Wronskian's sign is meaningless.
        // Any eigenvalue this grid was built for sits far above that zone.
        if h2 * self.k * e.abs() > 9.6 {
            return Sweep {
                nodes: 0,
                nodes_interior: 0,
                wronskian: None,
                i_match: m,
                resolved: false,
            };
        }
        let out = self.sweep_out(e, n - 1);
        let mut nodes = 0u32;
        let mut nodes_interior = 0u32;
        let mut last = out[0];
        for (i, &v) in out.iter().enumerate().skip(1) {
            if v != 0.0 {
                if last != 0.0 && v.signum() != last.signum() {
                    nodes += 1;
                    if i <= m {
                        nodes_interior += 1;
                    }
                }
                last = v;
            }
        }
        // The full sweep's overflow renormalizations in the forbidden tail
        // rescale (and can underflow) the early entries, so the matching
        // values come from a sweep stopped right at the matching point.
        let out = self.sweep_out(e, m + 1);
        let inw = self.sweep_in(e, m);
        // conserved discrete Wronskian of the Numerov-transformed variable
        let w = |i: usize, u: f64| (1.0 - h2 * self.f(i, e) / 12.0) * u;
        let scale_out = out[m].abs().max(out[m + 1].abs());
        let scale_in = inw[m].abs().max(inw[m + 1].abs());
        if scale_out == 0.0 || scale_in == 0.0 {
            return Sweep {
                nodes,
                nodes_interior,
                wronskian: Some(0.0),
                i_match: m,
                resolved: true,
            };
        }
        let (a0, a1) = (out[m] / scale_out, out[m + 1] / scale_out);
        let (b0, b1) = (inw[m] / scale_in, inw[m + 1] / scale_in);
        let wronskian = w(m + 1, a1) * w(m, b0) - w(m + 1, b1) * w(m, a0);
        Sweep {
            nodes,
            nodes_interior,
            wronskian: Some(wronskian),
            i_match: m,
            resolved: true,
        }
    }

    /// WKB-free check that the grid reaches deep enough into the forbidden
    /// tail at energy e: ∫κ dr past the turning point must be substantial.
    fn tail_decay(&self, e: f64, i_match: usize) -> f64 {
        let mut total = 0.0;
        for i in i_match..self.r.len() {
            total += self.f(i, e).max(0.0).sqrt() * self.h;
        }
        total
    }
}

fn solve_on_grid(
    model: &PotentialModel,
    constants: &PhysicalConstants,
    n_r: u32,
    l: u32,
    grid: &GridSpec,
    tol_e: f64,
) -> Result<(f64, u32)> {
    let shooter = Shooter::new(model, constants, l, grid)?;
    let e_scale = model.energy_scale(constants);

    // bracket: floor at the effective-potential minimum over the grid,
    // ceiling just below threshold (vanishing tails) or marched upward
    // (confining potentials)
    let mut e_lo = shooter
        .v_part
        .iter()
        .map(|&v| v / shooter.k)
        .fold(f64::INFINITY, f64::min);
    let mut e_hi;
    if model.vanishes_at_infinity() {
        e_hi = -tol::THRESHOLD_MARGIN * e_scale;
        let top = shooter.shoot(e_hi);
        if top.below(n_r) {
            // even just below threshold the requested node count is
            // unreachable on this grid
            return Err(Error::NodeCountMismatch {
                requested: n_r,
                found: top.nodes,
            });
        }
    } else {
        e_hi = e_lo + e_scale;
        let mut tries = 0;
        while shooter.shoot(e_hi).below(n_r) {
            e_hi = e_lo + 2.0 * (e_hi - e_lo);
            tries += 1;
            if tries > 200 {
                return Err(Error::NonConvergence {
                    what: "oracle energy ceiling search",
                });
            }
        }
    }

    let mut converged = false;
    for _ in 0..400 {
        let e_mid = 0.5 * (e_lo + e_hi);
        if (e_hi - e_lo).abs() <= tol_e * e_mid.abs().max(1e-3 * e_scale) * 1e-3
            || (e_hi - e_lo).abs() <= f64::EPSILON * e_mid.abs() * 4.0
        {
            converged = true;
            break;
        }
        if shooter.shoot(e_mid).below(n_r) {
            e_lo = e_mid;
        } else {
            e_hi = e_mid;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            what: "oracle bisection",
        });
    }

    let e = 0.5 * (e_lo + e_hi);
    let final_sweep = shooter.shoot(e);
    if final_sweep.wronskian.is_none() {
        return Err(Error::NonConvergence {
            what: "oracle landed below the potential well",
        });
    }
    if final_sweep.nodes_interior != n_r {
        return Err(Error::NodeCountMismatch {
            requested: n_r,
            found: final_sweep.nodes_interior,
        });
    }
    // The inward sweep self-corrects toward the decaying solution, so a
    // modest forbidden zone suffices: tail-start error (~1e-6 relative)
    // times e^(−2·1.5) keeps the boundary contamination far below the
    // discretization error. Genuinely truncated grids score ≪ 1 here.
    if shooter.tail_decay(e, final_sweep.i_match) < 1.5 {
        return Err(Error::GridTooSmall {
            r_max: grid.r_max,
            outer_turning_point: shooter.r[final_sweep.i_match],
        });
    }
    Ok((e, final_sweep.nodes_interior))
}

/// Solve for the n_r-th eigenvalue of the radial Schrödinger equation with
/// angular momentum l on the given grid.
///
/// `tol_e` is the relative energy tolerance of the bisection (the
/// discretization error of the grid usually dominates; see
/// `estimated_error`).
pub fn numerov_eigenvalue(
    model: &PotentialModel,
    constants: &PhysicalConstants,
    n_r: u32,
    l: u32,
    grid: &GridSpec,
    tol_e: f64,
) -> Result<OracleResult> {
    grid.validate()?;
    model.validate()?;
    constants.validate()?;
    let (energy, nodes) = solve_on_grid(model, constants, n_r, l, grid, tol_e)?;
    // half-resolution companion for the Richardson error estimate
    let coarse = GridSpec {
        r_min: grid.r_min,
        r_max: grid.r_max,
        points: (grid.points - 1) / 2 + 1,
    };
    let estimated_error = match solve_on_grid(model, constants, n_r, l, &coarse, tol_e) {
        Ok((e_coarse, _)) => (energy - e_coarse).abs() / 15.0,
        Err(_) => f64::INFINITY,
    };
    Ok(OracleResult {
        energy,
        nodes,
        grid: *grid,
        estimated_error,
    })
}

/// Re-solve on a grid with `factor`× the resolution and attach the
/// Richardson error estimate |E_fine − E_coarse| / (factor⁴ − 1).
pub fn refine(
    model: &PotentialModel,
    constants: &PhysicalConstants,
    n_r: u32,
    l: u32,
    result: &OracleResult,
    factor: usize,
) -> Result<OracleResult> {
    if factor < 2 {
        return Err(Error::InvalidParameter {
            what: "refinement factor must be at least 2",
        });
    }
    let fine = GridSpec {
        r_min: result.grid.r_min,
        r_max: result.grid.r_max,
        points: (result.grid.points - 1) * factor + 1,
    };
    let (energy, nodes) = solve_on_grid(model, constants, n_r, l, &fine, tol::ORACLE_E_REL_TOL)?;
    let estimated_error = (energy - result.energy).abs() / ((factor as f64).powi(4) - 1.0);
    Ok(OracleResult {
        energy,
        nodes,
        grid: fine,
        estimated_error,
    })
}

/// The normalized eigenfunction on the grid at a (previously converged)
/// energy: outward and inward sweeps merged at the outer turning point,
/// scaled to match, sign-fixed positive near the origin, and normalized to
/// ∫U² dr = 1 by Simpson's rule.
pub fn numerov_wavefunction(
    model: &PotentialModel,
    constants: &PhysicalConstants,
    energy: f64,
    l: u32,
    grid: &GridSpec,
) -> Result<Vec<f64>> {
    grid.validate()?;
    let shooter = Shooter::new(model, constants, l, grid)?;
    let m = shooter.match_index(energy).ok_or(Error::Domain {
        what: "no classically allowed region at this energy",
        value: energy,
    })?;
    let out = shooter.sweep_out(energy, m + 1);
    let inw = shooter.sweep_in(energy, m.saturating_sub(1));
    if inw[m] == 0.0 {
        return Err(Error::NonConvergence {
            what: "inward sweep vanished at the matching point",
        });
    }
    let s = out[m] / inw[m];
    let n = grid.points;
    let mut u = vec![0.0; n];
    u[..=m].copy_from_slice(&out[..=m]);
    for i in m + 1..n {
        u[i] = s * inw[i];
    }
    // Simpson normalization
    let h = shooter.h;
    let mut norm = 0.0;
    for i in 0..n {
        let w = if i == 0 || i == n - 1 {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        norm += w * u[i] * u[i];
    }
    norm = (norm * h / 3.0).sqrt();
    let sign = if u[1] >= 0.0 { 1.0 } else { -1.0 };
    for v in &mut u {
        *v *= sign / norm;
    }
    Ok(u)
}

/// Default grid for a target state: r_min = 1e-6·r_scale, 20001 points, and
/// r_max = 3× the outer turning point of the state (coarsely estimated from
/// a WKB solve) — extended, when that is not already enough, until the
/// forbidden tail accumulates ∫κ dr ≥ 12 past the turning point, so that the
/// outer-boundary contamination sits far below the discretization error.
pub fn default_grid(
    model: &PotentialModel,
    constants: &PhysicalConstants,
    n_r: u32,
    l: u32,
) -> Result<GridSpec> {
    let est = quantize::solve_eigenvalue(*model, constants, n_r, l, CentrifugalMode::Langer, 1e-6)?;
    let scale = model.r_scale(constants);
    // outer root of E_est = V(r) + l(l+1)ħ²/(2mr²): march out from the
    // estimated turning point, then bisect
    let ctx = RadialContext::new(
        *model,
        *constants,
        est.energy,
        l,
        CentrifugalMode::Schrodinger,
    );
    let g = |r: f64| est.energy - ctx.effective_potential(r).unwrap_or(f64::INFINITY);
    let mut inside = est.turning_points.r2.max(0.5 * scale);
    let mut tries = 0;
    while g(inside) <= 0.0 && tries < 60 {
        inside *= 0.9;
        tries += 1;
    }
    let mut outside = inside;
    tries = 0;
    while g(outside) > 0.0 && tries < 200 {
        outside *= 1.25;
        tries += 1;
    }
    let r2 = if g(inside) > 0.0 && g(outside) <= 0.0 {
        rootfind::bisect_root(g, inside, outside, 1e-10)?
    } else {
        est.turning_points.r2
    };
    let kappa = |r: f64| {
        let v = ctx.effective_potential(r).unwrap_or(f64::INFINITY);
        (2.0 * constants.mass * (v - est.energy)).max(0.0).sqrt() / constants.hbar
    };
    let decay = |r_max: f64| {
        let steps = 400;
        let dr = (r_max - r2) / steps as f64;
        (0..steps)
            .map(|i| kappa(r2 + (i as f64 + 0.5) * dr) * dr)
            .sum::<f64>()
    };
    let mut r_max = 3.0 * r2;
    for _ in 0..100 {
        if decay(r_max) >= 12.0 {
            break;
        }
        r_max *= 1.25;
    }
    GridSpec::new(1e-6 * scale, r_max, 20_001)
}
