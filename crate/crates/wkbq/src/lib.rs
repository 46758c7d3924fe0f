//! Semiclassical (WKB) bound-state quantization for spherically symmetric
//! potentials.
//!
//! The crate computes energy eigenvalues from the leading-order phase-integral
//! quantization condition ∫√(p²) dr = πħ(n_r + ½) under selectable
//! centrifugal-term conventions, solves the angular problem that fixes the
//! squared angular momentum to (l+½)²ħ², evaluates the WKB wavefunctions and
//! their validity diagnostics, and cross-checks every spectrum against an
//! independent fourth-order finite-difference (Numerov) solver of the radial
//! Schrödinger equation.
//!
//! See the `book/` guide for a narrative walkthrough; every code snippet in
//! it runs as a doc-test of this crate.
//!
//! Everything here is a pure function of its arguments over plain-data
//! types (`Copy` where small, `Send + Sync` throughout): results depend
//! only on inputs, nothing mutates shared state, and independent solves —
//! spectrum rows in particular — can run concurrently without coordination.

pub mod angular;
pub mod check;
pub mod error;
pub mod oracle;
pub mod potentials;
pub mod quad;
pub mod quantize;
pub mod rootfind;
pub mod spectrum;
pub mod tol;
pub mod wavefn;

mod guide;

pub use error::{Error, Result};
pub use potentials::{
    analytic_eigenvalue, bound_state_count, BoundStateCount, CentrifugalMode, PhysicalConstants,
    PotentialModel,
};
pub use quantize::{
    closed_form_phase_integral, find_turning_points, phase_integral, phase_integral_partial,
    phase_integral_with, solve_closed_form, solve_eigenvalue, QuantizationResult, RadialContext,
    TurningPoints,
};
