//! WKB wavefunctions and validity diagnostics.
//!
//! The objects here live in the ψ̃ representation, where the wave equation
//! has no first derivatives; division by √(det g) = √(r² sin θ) converts to
//! the ordinary wavefunction ψ (and by √sin θ for angular-only factors).
//!
//! * [`wkb_angular_value`] — the oscillatory WKB solution
//!   Θ̃(θ) = A/√|p| · cos((1/ħ)∫_{θ1}^{θ}√p² dθ′ − π/4)
//! * [`asymptotic_angular_value`] — its normalized large-l asymptote
//!   √(2/π · (l+½)/(l−|m|+½)) · cos[(l+½)θ − (π/2)|m| − π/4]
//! * [`RadialStandingWave`] — the standing-wave radial solution
//!   R̃(r) = A cos(p_n r/ħ − χ₁ − π/4)
//! * [`quasiclassicality_ratio`] — ħ|p′|/p², small where WKB is valid
//! * [`boundary_exponent`] — fitted small-θ power of the wave, which must
//!   reproduce the exact solution's θ^|m| behavior

use crate::angular::{angular_phase_partial, AngularContext};
use crate::error::{Error, Result};
use crate::potentials::PhysicalConstants;
use crate::quad;
use crate::quantize::{phase_integral_partial, RadialContext};
use crate::tol;

/// The oscillatory WKB solution of the polar equation on (θ1, θ2), with
/// M² = (l+½)²ħ² and M_z = mħ.
#[derive(Debug, Clone, Copy)]
pub struct WkbAngularWave {
    pub l: u32,
    pub m: i32,
    /// The arbitrary overall constant; defaults to 1.
    pub amplitude: f64,
    pub constants: PhysicalConstants,
}

impl WkbAngularWave {
    pub fn new(l: u32, m: i32, constants: PhysicalConstants) -> Result<Self> {
        if m.unsigned_abs() > l {
            return Err(Error::InvalidParameter {
                what: "|m| must not exceed l",
            });
        }
        Ok(Self {
            l,
            m,
            amplitude: 1.0,
            constants,
        })
    }

    pub fn with_amplitude(mut self, amplitude: f64) -> Self {
        self.amplitude = amplitude;
        self
    }

    fn context(&self) -> AngularContext {
        let hbar = self.constants.hbar;
        let s = (self.l as f64 + 0.5) * hbar;
        AngularContext::new(s * s, self.m as f64 * hbar, self.constants)
    }
}

/// Θ̃^WKB(θ) strictly inside the classically allowed interval.
///
/// Fails with [`Error::TurningPointSingularity`] when |p(θ)| drops below
/// 1e-6·(l+½)ħ — the 1/√|p| amplitude is meaningless at a turning point.
pub fn wkb_angular_value(wave: &WkbAngularWave, theta: f64) -> Result<f64> {
    let ctx = wave.context();
    let hbar = wave.constants.hbar;
    let (theta1, theta2) = ctx.turning_points()?;
    if theta <= theta1 || theta >= theta2 {
        return Err(Error::Domain {
            what: "theta outside the classically allowed interval",
            value: theta,
        });
    }
    let p2 = ctx.p_squared(theta);
    let p_abs = p2.max(0.0).sqrt();
    let cutoff = tol::TURNING_POINT_CUTOFF_REL * (wave.l as f64 + 0.5) * hbar;
    if p_abs < cutoff {
        return Err(Error::TurningPointSingularity { p_abs, cutoff });
    }
    let phase =
        angular_phase_partial(&ctx, theta, tol::QUAD_REL_TOL)? / hbar - std::f64::consts::FRAC_PI_4;
    Ok(wave.amplitude / p_abs.sqrt() * phase.cos())
}

/// Amplitude √(2/π · (l+½)/(l−|m|+½)) of the normalized asymptotic form.
pub fn asymptotic_prefactor(l: u32, m: i32) -> f64 {
    let lf = l as f64;
    let ma = m.unsigned_abs() as f64;
    (2.0 / std::f64::consts::PI * (lf + 0.5) / (lf - ma + 0.5)).sqrt()
}

/// The normalized asymptotic solution, valid far from the turning points
/// where p(θ) ≃ (l+½)ħ:
/// Θ̃(θ) = √(2/π · (l+½)/(l−|m|+½)) cos[(l+½)θ − (π/2)|m| − π/4].
pub fn asymptotic_angular_value(l: u32, m: i32, theta: f64) -> f64 {
    let lf = l as f64;
    let ma = m.unsigned_abs() as f64;
    let phase = (lf + 0.5) * theta - std::f64::consts::FRAC_PI_2 * ma - std::f64::consts::FRAC_PI_4;
    asymptotic_prefactor(l, m) * phase.cos()
}

/// The amplitude that makes [`wkb_angular_value`] coincide with
/// [`asymptotic_angular_value`] where p(θ) ≃ (l+½)ħ: the asymptotic
/// prefactor times √((l+½)ħ).
pub fn matched_amplitude(l: u32, m: i32, constants: &PhysicalConstants) -> f64 {
    asymptotic_prefactor(l, m) * ((l as f64 + 0.5) * constants.hbar).sqrt()
}

/// ψ = ψ̃ / √(r² sin θ).
pub fn to_psi_representation(value: f64, r: f64, theta: f64) -> Result<f64> {
    let jac = jacobian(r, theta)?;
    Ok(value / jac.sqrt())
}

/// ψ̃ = ψ · √(r² sin θ), the inverse conversion.
pub fn to_tilde_representation(value: f64, r: f64, theta: f64) -> Result<f64> {
    let jac = jacobian(r, theta)?;
    Ok(value * jac.sqrt())
}

/// Angular-only conversion Θ = Θ̃ / √sin θ.
pub fn to_psi_angular(value: f64, theta: f64) -> Result<f64> {
    let s = theta.sin();
    if s <= 0.0 {
        return Err(Error::Domain {
            what: "sin(theta) must be positive",
            value: theta,
        });
    }
    Ok(value / s.sqrt())
}

fn jacobian(r: f64, theta: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain {
            what: "r must be positive",
            value: r,
        });
    }
    let s = theta.sin();
    if s <= 0.0 {
        return Err(Error::Domain {
            what: "sin(theta) must be positive",
            value: theta,
        });
    }
    Ok(r * r * s)
}

/// The standing-wave radial solution R̃(r) = A cos(p_n r/ħ − χ₁ − π/4) in
/// the classically allowed region, with p_n = √(2m|E_n|).
#[derive(Debug, Clone, Copy)]
pub struct RadialStandingWave {
    /// Momentum √(2m|E_n|) of the level.
    pub p_n: f64,
    /// Phase offset: the value of the radial phase integral at r₁ (in units
    /// of ħ — see [`radial_phase_offset`]).
    pub chi1: f64,
    pub amplitude: f64,
    pub constants: PhysicalConstants,
}

impl RadialStandingWave {
    pub fn new(p_n: f64, chi1: f64, constants: PhysicalConstants) -> Result<Self> {
        if !(p_n > 0.0) {
            return Err(Error::InvalidParameter {
                what: "p_n must be positive",
            });
        }
        Ok(Self {
            p_n,
            chi1,
            amplitude: 1.0,
            constants,
        })
    }

    pub fn with_amplitude(mut self, amplitude: f64) -> Self {
        self.amplitude = amplitude;
        self
    }

    pub fn value(&self, r: f64) -> f64 {
        let phase = self.p_n * r / self.constants.hbar - self.chi1 - std::f64::consts::FRAC_PI_4;
        self.amplitude * phase.cos()
    }
}

/// χ₁ for [`RadialStandingWave`]: the radial phase integral from r₁ to
/// `r_ref`, divided by ħ.
pub fn radial_phase_offset(ctx: &RadialContext, r_ref: f64) -> Result<f64> {
    Ok(phase_integral_partial(ctx, r_ref, tol::QUAD_REL_TOL)? / ctx.constants.hbar)
}

/// The quasiclassicality diagnostic ħ|dp/dr| / p², evaluated with a central
/// finite difference of √p² at step h = 1e-6·r. Small values mean the WKB
/// form is locally valid; the ratio diverges toward the turning points.
pub fn quasiclassicality_ratio(ctx: &RadialContext, r: f64) -> Result<f64> {
    let p2 = ctx.p_squared(r)?;
    if p2 <= 0.0 {
        return Err(Error::Domain {
            what: "classically forbidden radius",
            value: r,
        });
    }
    let h = 1e-6 * r;
    let p_at = |x: f64| ctx.p_squared(x).map(|v| v.max(0.0).sqrt());
    let (p_plus, p_minus) = (p_at(r + h)?, p_at(r - h)?);
    let dp = if p_plus > 0.0 && p_minus > 0.0 {
        (p_plus - p_minus) / (2.0 * h)
    } else if p_plus > 0.0 {
        (p_plus - p2.sqrt()) / h
    } else if p_minus > 0.0 {
        (p2.sqrt() - p_minus) / h
    } else {
        return Err(Error::Domain {
            what: "both finite-difference stencil points forbidden",
            value: r,
        });
    };
    Ok(ctx.constants.hbar * dp.abs() / p2)
}

/// Fitted log–log slope of the small-θ envelope of the WKB angular wave in
/// the ψ representation; the exact solution behaves like θ^|m|, and the fit
/// must reproduce |m|.
///
/// For m ≠ 0 the small-θ window lies below the turning point θ₁ and the
/// envelope is the tunneling tail
/// |Θ(θ)| = exp(−(1/ħ)∫_θ^{θ1}|p|dθ′) / (√|p(θ)| √sin θ),
/// whose slope approaches |m| as θ → 0. For m = 0 there is no turning point
/// and no tail; there the claim reduces to the flatness of the amplitude
/// envelope 1/√p(θ) of Θ̃ (p → (l+½)ħ, slope 0), which is what gets fitted.
pub fn boundary_exponent(
    l: u32,
    m: i32,
    constants: &PhysicalConstants,
    window: (f64, f64),
    samples: usize,
) -> Result<f64> {
    if samples < 2 {
        return Err(Error::InvalidParameter {
            what: "need at least two samples for a slope fit",
        });
    }
    let hbar = constants.hbar;
    let big_m = (l as f64 + 0.5) * hbar;
    let m_z = (m as f64) * hbar;
    let (a, b) = window;
    if !(a > 0.0 && b > a) {
        return Err(Error::InvalidParameter {
            what: "window must satisfy 0 < a < b",
        });
    }

    let mut pts = Vec::with_capacity(samples);
    if m != 0 {
        let theta1 = (m_z.abs() / big_m).asin();
        if b >= theta1 {
            return Err(Error::Domain {
                what: "window must lie below the turning point",
                value: b,
            });
        }
        // |p(θ)| in the forbidden region
        let p_abs = move |t: f64| {
            (m_z * m_z / (t.sin() * t.sin()) - big_m * big_m)
                .max(0.0)
                .sqrt()
        };
        for i in 0..samples {
            let t = a * (b / a).powf(i as f64 / (samples - 1) as f64);
            let tail = quad::integrate_sqrt_endpoints(p_abs, t, theta1, tol::QUAD_REL_TOL)?;
            let ln_value = -tail / hbar - 0.5 * p_abs(t).ln() - 0.5 * t.sin().ln();
            pts.push((t.ln(), ln_value));
        }
    } else {
        for i in 0..samples {
            let t = a * (b / a).powf(i as f64 / (samples - 1) as f64);
            let s = t.sin();
            let p = (big_m * big_m - m_z * m_z / (s * s)).max(0.0).sqrt();
            let ln_envelope = -0.5 * p.ln();
            pts.push((t.ln(), ln_envelope));
        }
    }

    // least-squares slope
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    Ok((n * sxy - sx * sy) / (n * sxx - sx * sx))
}
