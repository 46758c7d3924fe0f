//! The radial quantization core.
//!
//! Builds the squared local momentum p²(r) = 2m[E − V(r)] − λ²/r², locates
//! the classical turning points, evaluates the phase integral
//! I(E) = ∫ √(p²) dr both numerically and, where an analytic expression
//! exists, in closed form, and root-solves the quantization condition
//! I(E) = πħ(n_r + ½) for the eigenvalue.
//!
//! Two solver routes exist. [`solve_eigenvalue`] drives the numerical
//! quadrature and is the ground-truth WKB value of the quantization
//! condition. [`solve_closed_form`] inverts the analytic phase integral
//! instead. For the Coulomb and oscillator potentials (and Morse without a
//! centrifugal term) the two routes agree to quadrature accuracy. For Morse
//! and Hulthén with a centrifugal term they do not: the analytic expressions
//! are contour-evaluation results that differ measurably from the true
//! integrals, and `wkbq check` quantifies the gap.

use crate::error::{Error, Result};
use crate::potentials::{CentrifugalMode, PhysicalConstants, PotentialModel};
use crate::quad;
use crate::rootfind;
use crate::tol;

/// Everything p²(r) depends on.
#[derive(Debug, Clone, Copy)]
pub struct RadialContext {
    pub model: PotentialModel,
    pub constants: PhysicalConstants,
    pub energy: f64,
    pub l: u32,
    pub mode: CentrifugalMode,
}

/// The classically allowed interval [r1, r2]. `r1 == r2` is the degenerate
/// case E = min V_eff, for which the phase integral is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurningPoints {
    pub r1: f64,
    pub r2: f64,
}

impl TurningPoints {
    pub fn is_degenerate(&self) -> bool {
        self.r1 >= self.r2
    }
}

/// A converged eigenvalue with its solve diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct QuantizationResult {
    pub energy: f64,
    /// |I(E) − πħ(n_r+½)| at the accepted energy.
    pub residual: f64,
    pub iterations: u32,
    pub turning_points: TurningPoints,
}

impl RadialContext {
    pub fn new(
        model: PotentialModel,
        constants: PhysicalConstants,
        energy: f64,
        l: u32,
        mode: CentrifugalMode,
    ) -> Self {
        Self {
            model,
            constants,
            energy,
            l,
            mode,
        }
    }

    /// λ² for this context's centrifugal convention.
    pub fn centrifugal_coefficient(&self) -> f64 {
        self.mode
            .centrifugal_coefficient(self.l, self.constants.hbar)
    }

    /// p²(r) = 2m[E − V(r)] − λ²/r².
    pub fn p_squared(&self, r: f64) -> Result<f64> {
        let v = self.model.evaluate(&self.constants, r)?;
        let lam2 = self.centrifugal_coefficient();
        Ok(2.0 * self.constants.mass * (self.energy - v) - lam2 / (r * r))
    }

    /// V_eff(r) = V(r) + λ²/(2 m r²); p² = 2m (E − V_eff).
    pub fn effective_potential(&self, r: f64) -> Result<f64> {
        let v = self.model.evaluate(&self.constants, r)?;
        let lam2 = self.centrifugal_coefficient();
        Ok(v + lam2 / (2.0 * self.constants.mass * r * r))
    }

    fn with_energy(&self, energy: f64) -> Self {
        Self { energy, ..*self }
    }
}

/// Scan grid for turning points: logarithmic, extended outward while the
/// integrand is still classically allowed at the far end.
const SCAN_POINTS: usize = 4001;

fn scan_range(ctx: &RadialContext) -> (f64, f64) {
    let scale = ctx.model.r_scale(&ctx.constants);
    let lo = 1e-6 * scale;
    let mut hi = 1e3 * scale;
    // potentials vanishing at infinity can have r2 beyond the nominal range
    // for shallow E; extend until the far end is classically forbidden
    for _ in 0..12 {
        if ctx.p_squared(hi).map(|p2| p2 < 0.0).unwrap_or(true) {
            break;
        }
        hi *= 4.0;
    }
    (lo, hi)
}

/// Locate the two turning points bracketing the classically allowed region,
/// refined to relative tolerance 1e-12.
///
/// Errors classify the failure: [`Error::NoClassicalRegion`] when p² < 0 on
/// the whole scan, [`Error::SingleTurningPoint`] when exactly one sign
/// change exists (a Coulomb-like problem with no centrifugal barrier),
/// [`Error::MultiWell`] for more than two sign changes. The degenerate case
/// E = min V_eff returns r1 = r2 rather than an error.
pub fn find_turning_points(ctx: &RadialContext) -> Result<TurningPoints> {
    let (lo, hi) = scan_range(ctx);
    let grid = rootfind::log_grid(lo, hi, SCAN_POINTS);
    let vals: Vec<f64> = grid
        .iter()
        .map(|&r| ctx.p_squared(r).unwrap_or(f64::NAN))
        .collect();
    if vals.iter().any(|v| v.is_nan()) {
        return Err(Error::Domain {
            what: "p² evaluated to NaN on scan grid",
            value: f64::NAN,
        });
    }

    let mut brackets: Vec<(f64, f64)> = Vec::new();
    for w in 0..SCAN_POINTS - 1 {
        if vals[w] == 0.0 {
            continue;
        }
        if vals[w].signum() != vals[w + 1].signum() && vals[w + 1] != 0.0 {
            brackets.push((grid[w], grid[w + 1]));
        }
    }

    match brackets.len() {
        2 => {
            let f = |r: f64| ctx.p_squared(r).unwrap_or(f64::NEG_INFINITY);
            let r1 =
                rootfind::bisect_root(f, brackets[0].0, brackets[0].1, tol::TURNING_POINT_REL_TOL)?;
            let r2 =
                rootfind::bisect_root(f, brackets[1].0, brackets[1].1, tol::TURNING_POINT_REL_TOL)?;
            // sample the open interval: a sub-grid dip would mean the scan
            // missed a well
            for k in 1..64 {
                let r = r1 + (r2 - r1) * k as f64 / 64.0;
                if ctx.p_squared(r).unwrap_or(-1.0) < 0.0 {
                    return Err(Error::MultiWell { sign_changes: 4 });
                }
            }
            Ok(TurningPoints { r1, r2 })
        }
        1 => Err(Error::SingleTurningPoint),
        0 => {
            if vals.iter().all(|&v| v > 0.0) {
                // classically allowed on the whole scan: nothing brackets it
                return Err(Error::NoClassicalRegion);
            }
            // Allowed region may be narrower than the grid spacing (E just
            // above min V_eff). Polish the p² maximum and look again.
            let imax = vals
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
                .map(|(i, _)| i)
                .unwrap();
            let (a, b) = (
                grid[imax.saturating_sub(1)],
                grid[(imax + 1).min(SCAN_POINTS - 1)],
            );
            let neg_p2 = |r: f64| -ctx.p_squared(r).unwrap_or(f64::NEG_INFINITY);
            let (r_peak, neg_max) = rootfind::golden_min(neg_p2, a, b, 1e-14);
            let p2_max = -neg_max;
            let p2_scale = 2.0
                * ctx.constants.mass
                * (ctx.energy.abs() + ctx.model.energy_scale(&ctx.constants));
            if p2_max.abs() <= 1e-11 * p2_scale {
                // E is at the bottom of the effective well
                return Ok(TurningPoints {
                    r1: r_peak,
                    r2: r_peak,
                });
            }
            if p2_max < 0.0 {
                return Err(Error::NoClassicalRegion);
            }
            let f = |r: f64| ctx.p_squared(r).unwrap_or(f64::NEG_INFINITY);
            let r1 = rootfind::bisect_root(f, a, r_peak, tol::TURNING_POINT_REL_TOL)?;
            let r2 = rootfind::bisect_root(f, r_peak, b, tol::TURNING_POINT_REL_TOL)?;
            Ok(TurningPoints { r1, r2 })
        }
        n => Err(Error::MultiWell { sign_changes: n }),
    }
}

/// Numerical phase integral ∫_{r1}^{r2} √(p²(r)) dr with the default
/// quadrature tolerance.
pub fn phase_integral(ctx: &RadialContext) -> Result<f64> {
    phase_integral_with(ctx, tol::QUAD_REL_TOL)
}

/// As [`phase_integral`], with an explicit quadrature tolerance.
pub fn phase_integral_with(ctx: &RadialContext, quad_tol: f64) -> Result<f64> {
    let tp = find_turning_points(ctx)?;
    if tp.is_degenerate() {
        return Ok(0.0);
    }
    // roundoff can push p² fractionally below zero just inside the interval
    let f = |r: f64| ctx.p_squared(r).unwrap_or(0.0).max(0.0).sqrt();
    quad::integrate_sqrt_endpoints(f, tp.r1, tp.r2, quad_tol)
}

/// Partial phase integral ∫_{r1}^{r_to} √(p²) dr, for phase offsets of the
/// standing-wave solution. `r_to` is clamped to the allowed interval.
pub fn phase_integral_partial(ctx: &RadialContext, r_to: f64, quad_tol: f64) -> Result<f64> {
    let tp = find_turning_points(ctx)?;
    if tp.is_degenerate() {
        return Ok(0.0);
    }
    let upper = r_to.clamp(tp.r1, tp.r2);
    let f = |r: f64| ctx.p_squared(r).unwrap_or(0.0).max(0.0).sqrt();
    quad::integrate_sqrt_endpoints(f, tp.r1, upper, quad_tol)
}

/// The analytic phase integral, where one exists:
///
/// * Coulomb: I = π (e² √(m/(−2E)) − λ)
/// * Oscillator: I = (π/2)(E/ω − λ)
/// * Morse: I = (π r₀/α)(√(2mV₀) − √(−2mE)) − πλ
/// * Hulthén: I = π r₀ √(2m)(√(V₀−E) − √(−E)) − πλ
///
/// with λ² the centrifugal coefficient of `ctx.mode`. Returns `None` when
/// the expression is undefined or negative (no classically bound region at
/// this energy). For Morse and Hulthén with λ > 0 these expressions are
/// analytic-continuation results that deviate measurably from the true
/// integral; see the module docs.
pub fn closed_form_phase_integral(ctx: &RadialContext) -> Option<f64> {
    let m = ctx.constants.mass;
    let e = ctx.energy;
    let lambda = ctx.centrifugal_coefficient().sqrt();
    let value = match ctx.model {
        PotentialModel::Coulomb { e2 } => {
            if e >= 0.0 {
                return None;
            }
            std::f64::consts::PI * (e2 * (m / (-2.0 * e)).sqrt() - lambda)
        }
        PotentialModel::Harmonic3D { omega } => std::f64::consts::PI * 0.5 * (e / omega - lambda),
        PotentialModel::Morse { v0, r0, alpha } => {
            if e >= 0.0 {
                return None;
            }
            std::f64::consts::PI * (r0 / alpha) * ((2.0 * m * v0).sqrt() - (-2.0 * m * e).sqrt())
                - std::f64::consts::PI * lambda
        }
        PotentialModel::Hulthen { v0, r0 } => {
            if e >= 0.0 {
                return None;
            }
            std::f64::consts::PI * r0 * (2.0 * m).sqrt() * ((v0 - e).sqrt() - (-e).sqrt())
                - std::f64::consts::PI * lambda
        }
    };
    (value >= 0.0).then_some(value)
}

/// Minimum of the effective potential over the scan grid, or `None` when the
/// minimum sits at the inner grid edge (no interior minimum — the
/// no-left-turning-point pathology).
fn effective_minimum(ctx: &RadialContext) -> Option<f64> {
    let (lo, hi) = scan_range(ctx);
    let grid = rootfind::log_grid(lo, hi, SCAN_POINTS);
    let vals: Vec<f64> = grid
        .iter()
        .map(|&r| ctx.effective_potential(r).unwrap_or(f64::INFINITY))
        .collect();
    let imin = vals
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    if imin == 0 {
        return None;
    }
    let (a, b) = (grid[imin - 1], grid[(imin + 1).min(SCAN_POINTS - 1)]);
    let f = |r: f64| ctx.effective_potential(r).unwrap_or(f64::INFINITY);
    let (_, vmin) = rootfind::golden_min(f, a, b, 1e-14);
    Some(vmin)
}

/// Solve the quantization condition I(E) = πħ(n_r + ½) for the eigenvalue by
/// bisection on the (strictly increasing) numerical phase integral.
///
/// `tol` bounds the accepted quantization residual relative to πħ.
pub fn solve_eigenvalue(
    model: PotentialModel,
    constants: &PhysicalConstants,
    n_r: u32,
    l: u32,
    mode: CentrifugalMode,
    tol_rel: f64,
) -> Result<QuantizationResult> {
    let hbar = constants.hbar;
    let target = std::f64::consts::PI * hbar * (n_r as f64 + 0.5);
    let probe = RadialContext::new(model, *constants, 0.0, l, mode);

    let e_scale = model.energy_scale(constants);
    let Some(v_min) = effective_minimum(&probe) else {
        // No interior minimum of V_eff: let the turning-point machinery
        // report why quantization cannot proceed, probing at a bound-scale
        // energy.
        let e_probe = if model.vanishes_at_infinity() {
            -0.5 * e_scale
        } else {
            1.5 * e_scale
        };
        find_turning_points(&probe.with_energy(e_probe))?;
        return Err(Error::NoClassicalRegion);
    };

    let mut e_lo = v_min;
    let mut e_hi;
    if model.vanishes_at_infinity() {
        e_hi = -tol::THRESHOLD_MARGIN * e_scale;
        if e_hi <= e_lo {
            return Err(Error::NoBoundState { n_r, l });
        }
    } else {
        // confining: march the ceiling up until the target is bracketed
        e_hi = v_min + e_scale;
        let mut tries = 0;
        loop {
            let i_hi = phase_integral(&probe.with_energy(e_hi))?;
            if i_hi > target {
                break;
            }
            e_hi = v_min + 2.0 * (e_hi - v_min);
            tries += 1;
            if tries > 100 {
                return Err(Error::NonConvergence {
                    what: "energy ceiling search",
                });
            }
        }
    }

    let mut iterations = 0u32;
    let mut hi_tested = !model.vanishes_at_infinity();
    for _ in 0..200 {
        let e_mid = 0.5 * (e_lo + e_hi);
        if (e_hi - e_lo).abs() <= 1e-15 * e_mid.abs().max(1e-12 * e_scale) {
            break;
        }
        iterations += 1;
        let i_mid = match phase_integral(&probe.with_energy(e_mid)) {
            Ok(v) => v,
            // just above the well bottom the region can be too thin to
            // bracket; treat as I below target
            Err(Error::NoClassicalRegion) => 0.0,
            Err(e) => return Err(e),
        };
        if i_mid < target {
            e_lo = e_mid;
            if (e_hi - e_lo).abs() <= 1e-14 * e_hi.abs() && !hi_tested {
                // converged onto the untested threshold ceiling
                break;
            }
        } else {
            e_hi = e_mid;
            hi_tested = true;
        }
    }

    let energy = 0.5 * (e_lo + e_hi);
    let ctx = probe.with_energy(energy);
    let i_final = phase_integral(&ctx)?;
    let residual = (i_final - target).abs();
    if residual > tol_rel * std::f64::consts::PI * hbar {
        if !hi_tested {
            return Err(Error::NoBoundState { n_r, l });
        }
        return Err(Error::NonConvergence {
            what: "quantization residual above tolerance",
        });
    }
    let turning_points = find_turning_points(&ctx)?;
    Ok(QuantizationResult {
        energy,
        residual,
        iterations,
        turning_points,
    })
}

/// Solve the quantization condition using the *closed-form* phase integral
/// instead of the quadrature. This is the analytic route: it reproduces the
/// closed-form spectra exactly (to root-finding tolerance) wherever the
/// analytic integral exists.
pub fn solve_closed_form(
    model: PotentialModel,
    constants: &PhysicalConstants,
    n_r: u32,
    l: u32,
    mode: CentrifugalMode,
    tol_rel: f64,
) -> Result<f64> {
    let hbar = constants.hbar;
    let target = std::f64::consts::PI * hbar * (n_r as f64 + 0.5);
    let probe = RadialContext::new(model, *constants, 0.0, l, mode);
    let i_of = |e: f64| closed_form_phase_integral(&probe.with_energy(e)).unwrap_or(0.0);

    let e_scale = model.energy_scale(constants);
    let (mut e_lo, mut e_hi);
    if model.vanishes_at_infinity() {
        // deep limit: I → 0 as E → −∞ for Morse/Hulthén; Coulomb is only
        // defined on E < 0 and I → ∞ at threshold
        e_lo = -1e6 * e_scale;
        e_hi = -tol::THRESHOLD_MARGIN * e_scale;
        if i_of(e_hi) < target {
            return Err(Error::NoBoundState { n_r, l });
        }
    } else {
        let lambda = probe.centrifugal_coefficient().sqrt();
        let omega = e_scale / hbar;
        e_lo = lambda * omega; // oscillator: min V_eff = λω exactly
        e_hi = e_lo + e_scale;
        let mut tries = 0;
        while i_of(e_hi) < target {
            e_hi = e_lo + 2.0 * (e_hi - e_lo);
            tries += 1;
            if tries > 100 {
                return Err(Error::NonConvergence {
                    what: "closed-form ceiling search",
                });
            }
        }
    }

    for _ in 0..500 {
        let e_mid = 0.5 * (e_lo + e_hi);
        if (e_hi - e_lo).abs() <= 1e-16 * e_mid.abs().max(1e-14 * e_scale) {
            break;
        }
        if i_of(e_mid) < target {
            e_lo = e_mid;
        } else {
            e_hi = e_mid;
        }
    }
    let energy = 0.5 * (e_lo + e_hi);
    let residual = (i_of(energy) - target).abs();
    if residual > tol_rel * std::f64::consts::PI * hbar {
        return Err(Error::NonConvergence {
            what: "closed-form quantization residual",
        });
    }
    Ok(energy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const C: PhysicalConstants = PhysicalConstants {
        hbar: 1.0,
        mass: 1.0,
    };

    fn coulomb_ctx(e: f64, l: u32, mode: CentrifugalMode) -> RadialContext {
        RadialContext::new(PotentialModel::Coulomb { e2: 1.0 }, C, e, l, mode)
    }

    #[test]
    fn p_squared_value() {
        let ctx = coulomb_ctx(-0.125, 1, CentrifugalMode::Langer);
        assert_relative_eq!(ctx.p_squared(4.0).unwrap(), 0.109375, epsilon = 1e-15);
    }

    #[test]
    fn p_squared_root() {
        // r² − 8r + 9 = 0 at r = 4 − √7
        let ctx = coulomb_ctx(-0.125, 1, CentrifugalMode::Langer);
        let r = 4.0 - 7.0f64.sqrt();
        assert!(ctx.p_squared(r).unwrap().abs() < 1e-13);
    }

    #[test]
    fn p_squared_rejects_nonpositive_radius() {
        let ctx = coulomb_ctx(-0.125, 1, CentrifugalMode::Langer);
        assert!(matches!(ctx.p_squared(0.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn coulomb_turning_points() {
        let ctx = coulomb_ctx(-0.125, 1, CentrifugalMode::Langer);
        let tp = find_turning_points(&ctx).unwrap();
        assert_relative_eq!(tp.r1, 4.0 - 7.0f64.sqrt(), max_relative = 1e-10);
        assert_relative_eq!(tp.r2, 4.0 + 7.0f64.sqrt(), max_relative = 1e-10);
    }

    #[test]
    fn coulomb_without_barrier_has_single_turning_point() {
        let ctx = coulomb_ctx(-0.5, 0, CentrifugalMode::None);
        assert_eq!(find_turning_points(&ctx), Err(Error::SingleTurningPoint));
        let ctx2 = coulomb_ctx(-0.5, 0, CentrifugalMode::Schrodinger);
        assert_eq!(find_turning_points(&ctx2), Err(Error::SingleTurningPoint));
    }

    #[test]
    fn degenerate_turning_points_at_well_bottom() {
        // oscillator, l = 1 Langer: min V_eff = λω at r = √(λ/mω)
        let lambda = 1.5;
        let ctx = RadialContext::new(
            PotentialModel::Harmonic3D { omega: 1.0 },
            C,
            lambda, // E = min V_eff exactly
            1,
            CentrifugalMode::Langer,
        );
        let tp = find_turning_points(&ctx).unwrap();
        assert!(
            tp.r2 - tp.r1 < 1e-4,
            "expected degenerate points, got {tp:?}"
        );
        assert_relative_eq!(tp.r1, lambda.sqrt(), max_relative = 1e-3);
        assert_eq!(phase_integral(&ctx).unwrap(), 0.0);
    }

    #[test]
    fn coulomb_phase_integral_is_closed_form() {
        let ctx = coulomb_ctx(-0.125, 1, CentrifugalMode::Langer);
        let i = phase_integral(&ctx).unwrap();
        assert_relative_eq!(i, PI / 2.0, max_relative = 1e-11);
    }

    #[test]
    fn oscillator_phase_integral() {
        let ctx = RadialContext::new(
            PotentialModel::Harmonic3D { omega: 1.0 },
            C,
            1.5,
            0,
            CentrifugalMode::Langer,
        );
        let i = phase_integral(&ctx).unwrap();
        assert_relative_eq!(i, PI / 2.0, max_relative = 1e-11);
        assert_relative_eq!(
            closed_form_phase_integral(&ctx).unwrap(),
            PI / 2.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn morse_closed_form_value() {
        let ctx = RadialContext::new(
            PotentialModel::Morse {
                v0: 10.0,
                r0: 1.0,
                alpha: 1.0,
            },
            C,
            -6.027_864_045_000_42, // Langer-route E₀
            0,
            CentrifugalMode::Langer,
        );
        assert_relative_eq!(
            closed_form_phase_integral(&ctx).unwrap(),
            PI / 2.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn hulthen_closed_form_value() {
        // b − a = ħN with a = √(−2mE), b = √(2m(V₀−E)); N = 2 at E = −4.5
        let ctx = RadialContext::new(
            PotentialModel::Hulthen { v0: 8.0, r0: 1.0 },
            C,
            -4.5,
            1,
            CentrifugalMode::Langer,
        );
        let i = closed_form_phase_integral(&ctx).unwrap();
        assert_relative_eq!(
            i,
            PI * (5.0 - 3.0) * std::f64::consts::FRAC_1_SQRT_2 * 2.0f64.sqrt() - PI * 1.5,
            epsilon = 1e-12
        );
        assert_relative_eq!(i, PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn coulomb_closed_form_diverges_at_threshold() {
        let ctx = coulomb_ctx(-1e-12, 0, CentrifugalMode::Langer);
        assert!(closed_form_phase_integral(&ctx).unwrap() > 1e5);
    }

    #[test]
    fn solve_coulomb_ground_state() {
        let r = solve_eigenvalue(
            PotentialModel::Coulomb { e2: 1.0 },
            &C,
            0,
            0,
            CentrifugalMode::Langer,
            tol::ROOT_REL_TOL,
        )
        .unwrap();
        assert_relative_eq!(r.energy, -0.5, max_relative = 1e-9);
        assert!(r.residual <= tol::ROOT_REL_TOL * PI);
        assert!(r.iterations > 0);
    }

    #[test]
    fn solve_hulthen_n2_via_closed_form_route() {
        let e = solve_closed_form(
            PotentialModel::Hulthen { v0: 8.0, r0: 1.0 },
            &C,
            0,
            1,
            CentrifugalMode::Langer,
            tol::ROOT_REL_TOL,
        )
        .unwrap();
        assert_relative_eq!(e, -4.5, max_relative = 1e-9);
    }

    #[test]
    fn solve_morse_schrodinger_route_first_excited() {
        let r = solve_eigenvalue(
            PotentialModel::Morse {
                v0: 10.0,
                r0: 1.0,
                alpha: 1.0,
            },
            &C,
            1,
            0,
            CentrifugalMode::None,
            tol::ROOT_REL_TOL,
        )
        .unwrap();
        // λ = 0 route is exact: E₁ of the half-line Morse problem
        let s = (2.0f64 * 10.0).sqrt();
        let e_ref = -10.0 * (1.0 - 1.5 / s) * (1.0 - 1.5 / s);
        assert_relative_eq!(r.energy, e_ref, max_relative = 1e-9);
        assert_relative_eq!(r.energy, -4.4167961, max_relative = 1e-7);
    }

    #[test]
    fn solve_rejects_unbound_request() {
        // Hulthén N = 4 is exactly at threshold
        let err = solve_eigenvalue(
            PotentialModel::Hulthen { v0: 8.0, r0: 1.0 },
            &C,
            3,
            0,
            CentrifugalMode::Langer,
            tol::ROOT_REL_TOL,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NoBoundState { .. }), "{err:?}");
    }

    #[test]
    fn solve_propagates_single_turning_point() {
        let err = solve_eigenvalue(
            PotentialModel::Coulomb { e2: 1.0 },
            &C,
            0,
            0,
            CentrifugalMode::None,
            tol::ROOT_REL_TOL,
        )
        .unwrap_err();
        assert_eq!(err, Error::SingleTurningPoint);
    }

    #[test]
    fn phase_integral_monotone_in_energy() {
        // l = 1 Langer: bound bracket is (min V_eff, 0) = (−2/9, 0)
        for &(e1, e2) in &[(-0.2, -0.15), (-0.15, -0.1), (-0.1, -0.05)] {
            let i1 = phase_integral(&coulomb_ctx(e1, 1, CentrifugalMode::Langer)).unwrap();
            let i2 = phase_integral(&coulomb_ctx(e2, 1, CentrifugalMode::Langer)).unwrap();
            assert!(i2 > i1);
        }
    }

    #[test]
    fn partial_phase_integral_reaches_full_value() {
        let ctx = coulomb_ctx(-0.125, 1, CentrifugalMode::Langer);
        let tp = find_turning_points(&ctx).unwrap();
        let full = phase_integral(&ctx).unwrap();
        let part = phase_integral_partial(&ctx, tp.r2, tol::QUAD_REL_TOL).unwrap();
        assert_relative_eq!(part, full, max_relative = 1e-10);
        let half = phase_integral_partial(&ctx, 4.0, tol::QUAD_REL_TOL).unwrap();
        assert!(half > 0.0 && half < full);
    }
}
