//! The four supported potential models, their closed-form reference spectra,
//! and the centrifugal-term conventions.
//!
//! All quantities are in reduced units: ħ and the particle mass default to 1
//! and every parameter is accepted in those units.

use crate::error::{Error, Result};

/// ħ and the particle mass, shared by every computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub mass: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
        }
    }
}

impl PhysicalConstants {
    pub fn validate(&self) -> Result<()> {
        if !(self.hbar > 0.0) {
            return Err(Error::InvalidParameter {
                what: "hbar must be positive",
            });
        }
        if !(self.mass > 0.0) {
            return Err(Error::InvalidParameter {
                what: "mass must be positive",
            });
        }
        Ok(())
    }
}

/// Which centrifugal term enters p²(r).
///
/// `Langer` — the (l+½)²ħ²/r² form — is the default; `Schrodinger` keeps the
/// l(l+1)ħ²/r² term of the radial Schrödinger equation, and `None` drops the
/// term entirely (the bare one-dimensional problem on the half-line).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CentrifugalMode {
    None,
    Schrodinger,
    #[default]
    Langer,
}

impl CentrifugalMode {
    /// λ² such that the centrifugal term is λ²/r².
    pub fn centrifugal_coefficient(self, l: u32, hbar: f64) -> f64 {
        let lf = l as f64;
        match self {
            CentrifugalMode::None => 0.0,
            CentrifugalMode::Schrodinger => lf * (lf + 1.0) * hbar * hbar,
            CentrifugalMode::Langer => (lf + 0.5) * (lf + 0.5) * hbar * hbar,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CentrifugalMode::None => "none",
            CentrifugalMode::Schrodinger => "schrodinger",
            CentrifugalMode::Langer => "langer",
        }
    }
}

/// The supported spherically symmetric potentials.
///
/// * `Coulomb`: V(r) = −e²/r
/// * `Harmonic3D`: V(r) = ½ m ω² r²
/// * `Morse`: V(r) = V₀ [e^(−2α(r/r₀−1)) − 2 e^(−α(r/r₀−1))]
/// * `Hulthen`: V(r) = −V₀ e^(−r/r₀)/(1 − e^(−r/r₀))
///
/// Extending the set means adding a variant here plus its arms in
/// `evaluate`, `r_scale`, `energy_scale`, and — when closed forms exist —
/// `analytic_eigenvalue` and `closed_form_phase_integral`. The solvers and
/// the oracle only consume `evaluate` and the scales.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialModel {
    Coulomb { e2: f64 },
    Harmonic3D { omega: f64 },
    Morse { v0: f64, r0: f64, alpha: f64 },
    Hulthen { v0: f64, r0: f64 },
}

/// Number of bound states for a given (l, mode), per the closed-form spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStateCount {
    Unbounded,
    Finite(u32),
}

impl PotentialModel {
    pub fn name(&self) -> &'static str {
        match self {
            PotentialModel::Coulomb { .. } => "coulomb",
            PotentialModel::Harmonic3D { .. } => "harmonic",
            PotentialModel::Morse { .. } => "morse",
            PotentialModel::Hulthen { .. } => "hulthen",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            PotentialModel::Coulomb { e2 } => e2 > 0.0,
            PotentialModel::Harmonic3D { omega } => omega > 0.0,
            PotentialModel::Morse { v0, r0, alpha } => v0 > 0.0 && r0 > 0.0 && alpha > 0.0,
            PotentialModel::Hulthen { v0, r0 } => v0 > 0.0 && r0 > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter {
                what: "potential parameters must be positive",
            })
        }
    }

    /// V(r). Needs the constants because the oscillator depends on the mass.
    pub fn evaluate(&self, constants: &PhysicalConstants, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::Domain {
                what: "potential evaluated at r <= 0",
                value: r,
            });
        }
        Ok(match *self {
            PotentialModel::Coulomb { e2 } => -e2 / r,
            PotentialModel::Harmonic3D { omega } => 0.5 * constants.mass * omega * omega * r * r,
            PotentialModel::Morse { v0, r0, alpha } => {
                let x = alpha * (r - r0) / r0;
                v0 * ((-2.0 * x).exp() - 2.0 * (-x).exp())
            }
            // e^(−x)/(1 − e^(−x)) = 1/(eˣ − 1); expm1 keeps the small-r
            // limit −V₀ r₀/r free of cancellation.
            PotentialModel::Hulthen { v0, r0 } => -v0 / (r / r0).exp_m1(),
        })
    }

    /// Characteristic length: r₀ where the model has one, the Bohr-like
    /// length ħ²/(m e²) for Coulomb, √(ħ/mω) for the oscillator.
    pub fn r_scale(&self, c: &PhysicalConstants) -> f64 {
        match *self {
            PotentialModel::Coulomb { e2 } => c.hbar * c.hbar / (c.mass * e2),
            PotentialModel::Harmonic3D { omega } => (c.hbar / (c.mass * omega)).sqrt(),
            PotentialModel::Morse { r0, .. } => r0,
            PotentialModel::Hulthen { r0, .. } => r0,
        }
    }

    /// Characteristic energy: the natural level spacing / well depth.
    pub fn energy_scale(&self, c: &PhysicalConstants) -> f64 {
        match *self {
            PotentialModel::Coulomb { e2 } => c.mass * e2 * e2 / (c.hbar * c.hbar),
            PotentialModel::Harmonic3D { omega } => c.hbar * omega,
            PotentialModel::Morse { v0, .. } => v0,
            PotentialModel::Hulthen { v0, .. } => v0,
        }
    }

    /// Does V(r) → 0 as r → ∞ (so that bound states live at E < 0)?
    pub fn vanishes_at_infinity(&self) -> bool {
        !matches!(self, PotentialModel::Harmonic3D { .. })
    }
}

/// The closed-form reference eigenvalue for (n_r, l), or `None` where no
/// formula applies or the state is unbound.
///
/// The exact quantum spectra of Coulomb, the 3-D oscillator, and Hulthén do
/// not depend on the centrifugal convention, so `mode` is ignored for them.
/// Morse has two distinct closed forms and `mode` selects the route: the
/// half-line Schrödinger result at l = 0 (modes `None`/`Schrodinger`),
///
/// E_n = −V₀ [1 − αħ(n_r+½)/(r₀√(2mV₀))]²,
///
/// or the Langer-route result with λ = ħ(l+½),
///
/// E_n = −V₀ [1 − α(ħ(n_r+½)+λ)/(r₀√(2mV₀))]².
pub fn analytic_eigenvalue(
    model: &PotentialModel,
    constants: &PhysicalConstants,
    n_r: u32,
    l: u32,
    mode: CentrifugalMode,
) -> Option<f64> {
    let (hbar, mass) = (constants.hbar, constants.mass);
    let nf = n_r as f64;
    let lf = l as f64;
    match *model {
        PotentialModel::Coulomb { e2 } => {
            let n_princ = nf + lf + 1.0;
            Some(-mass * e2 * e2 / (2.0 * hbar * hbar * n_princ * n_princ))
        }
        PotentialModel::Harmonic3D { omega } => Some(hbar * omega * (2.0 * nf + lf + 1.5)),
        PotentialModel::Morse { v0, r0, alpha } => {
            let lambda = match mode {
                CentrifugalMode::Langer => hbar * (lf + 0.5),
                CentrifugalMode::None | CentrifugalMode::Schrodinger => {
                    if l != 0 {
                        return None;
                    }
                    0.0
                }
            };
            let bracket =
                1.0 - alpha * (hbar * (nf + 0.5) + lambda) / (r0 * (2.0 * mass * v0).sqrt());
            if bracket <= 0.0 {
                return None;
            }
            Some(-v0 * bracket * bracket)
        }
        PotentialModel::Hulthen { v0, r0 } => {
            let n_princ = (nf + lf + 1.0) * hbar;
            let x = 2.0 * mass * v0 * r0 * r0 / n_princ - n_princ;
            if x <= 0.0 {
                return None;
            }
            Some(-x * x / (8.0 * mass * r0 * r0))
        }
    }
}

/// How many n_r values have a closed-form bound state for this (l, mode).
pub fn bound_state_count(
    model: &PotentialModel,
    constants: &PhysicalConstants,
    l: u32,
    mode: CentrifugalMode,
) -> BoundStateCount {
    match model {
        PotentialModel::Coulomb { .. } | PotentialModel::Harmonic3D { .. } => {
            BoundStateCount::Unbounded
        }
        PotentialModel::Morse { .. } | PotentialModel::Hulthen { .. } => {
            // The spectra terminate after at most O(√(2mV₀) r₀/ħ) levels;
            // counting by direct probes keeps this consistent with
            // `analytic_eigenvalue` by construction.
            let mut n_r = 0u32;
            while analytic_eigenvalue(model, constants, n_r, l, mode).is_some() {
                n_r += 1;
                if n_r > 1_000_000 {
                    return BoundStateCount::Unbounded;
                }
            }
            BoundStateCount::Finite(n_r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const C: PhysicalConstants = PhysicalConstants {
        hbar: 1.0,
        mass: 1.0,
    };

    #[test]
    fn coulomb_value() {
        let v = PotentialModel::Coulomb { e2: 1.0 }
            .evaluate(&C, 2.0)
            .unwrap();
        assert_relative_eq!(v, -0.5, epsilon = 1e-15);
    }

    #[test]
    fn morse_at_equilibrium_is_minus_depth() {
        let m = PotentialModel::Morse {
            v0: 10.0,
            r0: 1.0,
            alpha: 1.0,
        };
        assert_relative_eq!(m.evaluate(&C, 1.0).unwrap(), -10.0, epsilon = 1e-14);
    }

    #[test]
    fn hulthen_diverges_like_coulomb_at_origin() {
        // e^(−r)/(1−e^(−r)) = 1/r − 1/2 + r/12 + O(r³)
        let h = PotentialModel::Hulthen { v0: 8.0, r0: 1.0 };
        let r = 1e-6;
        let v = h.evaluate(&C, r).unwrap();
        let series = -8.0 * (1.0 / r - 0.5 + r / 12.0);
        assert_relative_eq!(v, series, max_relative = 1e-12);
        // leading behavior −8/r
        assert_relative_eq!(v * r, -8.0, max_relative = 1e-6);
    }

    #[test]
    fn oscillator_needs_mass() {
        let c2 = PhysicalConstants {
            hbar: 1.0,
            mass: 3.0,
        };
        let h = PotentialModel::Harmonic3D { omega: 2.0 };
        assert_relative_eq!(h.evaluate(&c2, 1.5).unwrap(), 0.5 * 3.0 * 4.0 * 2.25);
    }

    #[test]
    fn nonpositive_radius_is_domain_error() {
        let m = PotentialModel::Coulomb { e2: 1.0 };
        assert!(matches!(m.evaluate(&C, 0.0), Err(Error::Domain { .. })));
        assert!(matches!(m.evaluate(&C, -1.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn coulomb_spectrum() {
        let m = PotentialModel::Coulomb { e2: 1.0 };
        let e = analytic_eigenvalue(&m, &C, 1, 0, CentrifugalMode::Langer).unwrap();
        assert_relative_eq!(e, -0.125, epsilon = 1e-15);
        // mode-independent reference
        let e2 = analytic_eigenvalue(&m, &C, 1, 0, CentrifugalMode::Schrodinger).unwrap();
        assert_eq!(e, e2);
    }

    #[test]
    fn morse_two_routes() {
        let m = PotentialModel::Morse {
            v0: 10.0,
            r0: 1.0,
            alpha: 1.0,
        };
        let s = (2.0 * 10.0f64).sqrt();
        let e28 = -10.0 * (1.0 - 0.5 / s) * (1.0 - 0.5 / s);
        let e34 = -10.0 * (1.0 - 1.0 / s) * (1.0 - 1.0 / s);
        let got28 = analytic_eigenvalue(&m, &C, 0, 0, CentrifugalMode::Schrodinger).unwrap();
        let got34 = analytic_eigenvalue(&m, &C, 0, 0, CentrifugalMode::Langer).unwrap();
        assert_relative_eq!(got28, e28, epsilon = 1e-15);
        assert_relative_eq!(got34, e34, epsilon = 1e-15);
        assert_relative_eq!(got28, -7.8889322, max_relative = 1e-7);
        assert_relative_eq!(got34, -6.0278640, max_relative = 1e-7);
        // Schrödinger route only exists at l = 0
        assert!(analytic_eigenvalue(&m, &C, 0, 1, CentrifugalMode::Schrodinger).is_none());
        assert!(analytic_eigenvalue(&m, &C, 0, 1, CentrifugalMode::Langer).is_some());
    }

    #[test]
    fn morse_langer_route_at_lambda_zero_reproduces_schrodinger_route() {
        // The Langer-route formula with λ set to 0 is the Schrödinger-route
        // formula; check the identity over the whole bound range.
        let (v0, r0, alpha) = (10.0, 1.0, 1.0);
        let s = r0 * (2.0f64 * v0).sqrt() / alpha;
        for n_r in 0..4u32 {
            let b = 1.0 - (n_r as f64 + 0.5) / s;
            let schrodinger_route = -v0 * b * b;
            let langer_route_lambda0 = {
                let lambda = 0.0;
                let b = 1.0 - alpha * ((n_r as f64 + 0.5) + lambda) / (r0 * (2.0f64 * v0).sqrt());
                -v0 * b * b
            };
            assert_eq!(schrodinger_route, langer_route_lambda0);
        }
    }

    #[test]
    fn hulthen_spectrum() {
        let m = PotentialModel::Hulthen { v0: 8.0, r0: 1.0 };
        let e = analytic_eigenvalue(&m, &C, 2, 0, CentrifugalMode::Langer).unwrap();
        assert_relative_eq!(
            e,
            -(16.0 / 3.0 - 3.0) * (16.0 / 3.0 - 3.0) / 8.0,
            epsilon = 1e-14
        );
        assert_relative_eq!(e, -0.68055556, max_relative = 1e-7);
        // N = 4 sits exactly at threshold: not a bound state.
        assert!(analytic_eigenvalue(&m, &C, 3, 0, CentrifugalMode::Langer).is_none());
    }

    #[test]
    fn bound_state_counts() {
        let h = PotentialModel::Hulthen { v0: 8.0, r0: 1.0 };
        assert_eq!(
            bound_state_count(&h, &C, 0, CentrifugalMode::Langer),
            BoundStateCount::Finite(3)
        );
        let m = PotentialModel::Morse {
            v0: 10.0,
            r0: 1.0,
            alpha: 1.0,
        };
        assert_eq!(
            bound_state_count(&m, &C, 0, CentrifugalMode::Schrodinger),
            BoundStateCount::Finite(4)
        );
        let o = PotentialModel::Harmonic3D { omega: 1.0 };
        assert_eq!(
            bound_state_count(&o, &C, 7, CentrifugalMode::Langer),
            BoundStateCount::Unbounded
        );
    }

    #[test]
    fn analytic_strictly_increasing_in_n_r() {
        let models = [
            PotentialModel::Coulomb { e2: 1.0 },
            PotentialModel::Harmonic3D { omega: 1.0 },
            PotentialModel::Morse {
                v0: 10.0,
                r0: 1.0,
                alpha: 1.0,
            },
            PotentialModel::Hulthen { v0: 8.0, r0: 1.0 },
        ];
        for m in &models {
            let mut prev = f64::NEG_INFINITY;
            let mut n_r = 0;
            while let Some(e) = analytic_eigenvalue(m, &C, n_r, 0, CentrifugalMode::Langer) {
                assert!(
                    e > prev,
                    "{}: E(n_r={n_r}) = {e} not above {prev}",
                    m.name()
                );
                prev = e;
                n_r += 1;
                if n_r > 6 {
                    break;
                }
            }
        }
    }

    #[test]
    fn evaluate_is_continuous_on_log_grid() {
        // crude continuity probe: finite values and bounded local variation
        // on a dense logarithmic grid
        let models = [
            PotentialModel::Coulomb { e2: 1.0 },
            PotentialModel::Harmonic3D { omega: 1.0 },
            PotentialModel::Morse {
                v0: 10.0,
                r0: 1.0,
                alpha: 1.0,
            },
            PotentialModel::Hulthen { v0: 8.0, r0: 1.0 },
        ];
        for m in &models {
            let grid = crate::rootfind::log_grid(1e-6, 1e3, 4000);
            let vals: Vec<f64> = grid.iter().map(|&r| m.evaluate(&C, r).unwrap()).collect();
            assert!(vals.iter().all(|v| v.is_finite()), "{}", m.name());
            // each model is monotone except Morse (one interior minimum)
            let flips = vals
                .windows(2)
                .map(|w| w[1] - w[0])
                .collect::<Vec<_>>()
                .windows(2)
                .filter(|d| d[0].signum() != d[1].signum() && d[0] != 0.0)
                .count();
            let max_flips = match m {
                PotentialModel::Morse { .. } => 1,
                _ => 0,
            };
            assert!(
                flips <= max_flips,
                "{}: {} slope sign flips",
                m.name(),
                flips
            );
        }
    }

    #[test]
    fn validation_rejects_bad_parameters() {
        assert!(PotentialModel::Hulthen { v0: -8.0, r0: 1.0 }
            .validate()
            .is_err());
        assert!(PotentialModel::Morse {
            v0: 10.0,
            r0: 0.0,
            alpha: 1.0
        }
        .validate()
        .is_err());
        assert!(PhysicalConstants {
            hbar: 0.0,
            mass: 1.0
        }
        .validate()
        .is_err());
    }
}
