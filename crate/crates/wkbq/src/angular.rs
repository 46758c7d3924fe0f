//! The angular (θ) and azimuthal (φ) quantization problems.
//!
//! The azimuthal equation gives M_z = mħ immediately. The polar equation
//! carries the squared local momentum p²(θ) = M² − M_z²/sin²θ; quantizing
//! its phase integral ∫√(p²) dθ = πħ(n_θ + ½) fixes the squared angular
//! momentum to M² = (l+½)²ħ² with l = |m| + n_θ — the eigenvalue that feeds
//! the radial problem's centrifugal term in `Langer` mode.
//!
//! The phase integral has the closed form π(√M² − |M_z|), which the
//! quadrature here reproduces to the requested tolerance; the θ-integration
//! is done in the shifted variable α = θ − π/2 where the turning points sit
//! symmetrically.

use crate::error::{Error, Result};
use crate::potentials::PhysicalConstants;
use crate::quad;
use crate::tol;

/// Arguments of the polar momentum p²(θ).
#[derive(Debug, Clone, Copy)]
pub struct AngularContext {
    /// Squared angular momentum M².
    pub m_squared: f64,
    /// Angular momentum projection M_z.
    pub m_z: f64,
    pub constants: PhysicalConstants,
}

impl AngularContext {
    pub fn new(m_squared: f64, m_z: f64, constants: PhysicalConstants) -> Self {
        Self {
            m_squared,
            m_z,
            constants,
        }
    }

    /// p²(θ) = M² − M_z²/sin²θ.
    pub fn p_squared(&self, theta: f64) -> f64 {
        let s = theta.sin();
        self.m_squared - self.m_z * self.m_z / (s * s)
    }

    /// Classical turning points of p²(θ) = 0, symmetric about π/2.
    /// For M_z = 0 there are no roots and the limits are the coordinate
    /// boundaries [0, π], so that the closed form π√M² holds continuously.
    pub fn turning_points(&self) -> Result<(f64, f64)> {
        if self.m_squared < self.m_z * self.m_z {
            return Err(Error::NoClassicalRegion);
        }
        if self.m_z == 0.0 {
            return Ok((0.0, std::f64::consts::PI));
        }
        let theta1 = (self.m_z.abs() / self.m_squared.sqrt()).asin();
        Ok((theta1, std::f64::consts::PI - theta1))
    }
}

/// Eigenvalue record of the polar problem: M² = (l+½)²ħ², l = |m| + n_θ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularEigenvalue {
    pub m_squared: f64,
    pub l: u32,
    pub n_theta: u32,
    pub m: i32,
}

/// M_z = mħ.
pub fn azimuthal_eigenvalue(m: i32, constants: &PhysicalConstants) -> f64 {
    m as f64 * constants.hbar
}

/// Numerical ∫_{θ1}^{θ2} √(M² − M_z²/sin²θ) dθ at the default quadrature
/// tolerance.
pub fn angular_phase_integral(ctx: &AngularContext) -> Result<f64> {
    angular_phase_integral_with(ctx, tol::QUAD_REL_TOL)
}

/// As [`angular_phase_integral`] with an explicit quadrature tolerance.
pub fn angular_phase_integral_with(ctx: &AngularContext, quad_tol: f64) -> Result<f64> {
    let (theta1, _) = ctx.turning_points()?;
    let alpha0 = std::f64::consts::FRAC_PI_2 - theta1;
    if alpha0 <= 0.0 {
        // coincident turning points at θ = π/2
        return Ok(0.0);
    }
    // α = θ − π/2: p²(α) = M² − M_z²/cos²α, integrand symmetric about 0
    let f = |alpha: f64| {
        let c = alpha.cos();
        (ctx.m_squared - ctx.m_z * ctx.m_z / (c * c))
            .max(0.0)
            .sqrt()
    };
    Ok(2.0 * quad::integrate_sqrt_endpoints(f, 0.0, alpha0, quad_tol)?)
}

/// Partial polar phase ∫_{θ1}^{θ} √(p²) dθ′ (θ clamped to the allowed
/// interval), used by the WKB wavefunction.
pub fn angular_phase_partial(ctx: &AngularContext, theta: f64, quad_tol: f64) -> Result<f64> {
    let (theta1, theta2) = ctx.turning_points()?;
    let upper = theta.clamp(theta1, theta2);
    let f = |t: f64| ctx.p_squared(t).max(0.0).sqrt();
    quad::integrate_sqrt_endpoints(f, theta1, upper, quad_tol)
}

/// Closed form of the polar phase integral: π(√M² − |M_z|).
pub fn angular_phase_closed_form(ctx: &AngularContext) -> Result<f64> {
    if ctx.m_squared < ctx.m_z * ctx.m_z {
        return Err(Error::NoClassicalRegion);
    }
    Ok(std::f64::consts::PI * (ctx.m_squared.sqrt() - ctx.m_z.abs()))
}

/// The closed-form squared-angular-momentum eigenvalue record.
pub fn angular_momentum_eigenvalue(
    n_theta: u32,
    m: i32,
    constants: &PhysicalConstants,
) -> AngularEigenvalue {
    let l = m.unsigned_abs() + n_theta;
    let s = (l as f64 + 0.5) * constants.hbar;
    AngularEigenvalue {
        m_squared: s * s,
        l,
        n_theta,
        m,
    }
}

/// Numerically invert the polar quantization condition
/// ∫√(p²) dθ = πħ(n_θ + ½) for M².
///
/// The search runs in s = √M² where the closed form is linear, so the
/// bracket [|M_z|, ħ(|m| + n_θ + 2)] always contains the root.
pub fn solve_m_squared(
    n_theta: u32,
    m: i32,
    constants: &PhysicalConstants,
    tol_rel: f64,
) -> Result<f64> {
    let hbar = constants.hbar;
    let m_z = azimuthal_eigenvalue(m, constants);
    let target = std::f64::consts::PI * hbar * (n_theta as f64 + 0.5);
    let i_of = |s: f64| {
        let ctx = AngularContext::new(s * s, m_z, *constants);
        angular_phase_integral(&ctx)
    };

    let mut s_lo = m_z.abs();
    let mut s_hi = hbar * (m.unsigned_abs() as f64 + n_theta as f64 + 2.0);
    for _ in 0..200 {
        let s_mid = 0.5 * (s_lo + s_hi);
        if (s_hi - s_lo).abs() <= 1e-15 * s_mid.max(1e-15 * hbar) {
            break;
        }
        if i_of(s_mid)? < target {
            s_lo = s_mid;
        } else {
            s_hi = s_mid;
        }
    }
    let s = 0.5 * (s_lo + s_hi);
    let residual = (i_of(s)? - target).abs();
    if residual > tol_rel * std::f64::consts::PI * hbar {
        return Err(Error::NonConvergence {
            what: "angular quantization residual",
        });
    }
    Ok(s * s)
}
