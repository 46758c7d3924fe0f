//! Default numerical tolerances, with the reasoning behind each value.
//!
//! Everything here can be overridden per call; the CLI additionally honors
//! the `WKB_TOL_QUAD` and `WKB_TOL_ROOT` environment variables.

/// Relative agreement between successive panel doublings at which the
/// phase-integral quadrature stops refining.
///
/// Gauss–Legendre on the sin²-regularized integrand converges spectrally,
/// so the true error at acceptance is normally far below this threshold.
/// 1e-11 leaves an order of magnitude of headroom under the 1e-10 accuracy
/// the phase integral advertises.
pub const QUAD_REL_TOL: f64 = 1e-11;

/// Default quantization-residual tolerance for the eigenvalue solvers:
/// |I(E) − πħ(n_r+½)| ≤ ROOT_REL_TOL · πħ at acceptance.
///
/// Must sit above `QUAD_REL_TOL`: bisection cannot resolve the residual
/// below the noise floor of the quadrature it is driven by.
pub const ROOT_REL_TOL: f64 = 1e-10;

/// Relative position tolerance for turning-point refinement.
pub const TURNING_POINT_REL_TOL: f64 = 1e-12;

/// Cutoff on |p| (relative to (l+½)ħ) below which the WKB amplitude 1/√|p|
/// is refused rather than returned huge. The WKB form is invalid at a
/// turning point; failing loudly beats returning a meaningless number.
pub const TURNING_POINT_CUTOFF_REL: f64 = 1e-6;

/// Default absolute energy tolerance (scaled by max(|E|, 1)) for the
/// finite-difference oracle's bisection.
pub const ORACLE_E_REL_TOL: f64 = 1e-12;

/// Energies closer to the continuum threshold than this fraction of the
/// model's energy scale are treated as unbound by the eigenvalue bracketing
/// (potentials that vanish at infinity only).
pub const THRESHOLD_MARGIN: f64 = 1e-9;

/// Panel-count cap for the adaptive quadrature; exceeding it is reported as
/// non-convergence instead of silently returning a stale estimate.
pub const MAX_QUAD_PANELS: usize = 1024;
