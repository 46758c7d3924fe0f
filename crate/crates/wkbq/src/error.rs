use std::fmt;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while quantizing.
///
/// Turning-point classification failures are distinct variants: callers
/// need to tell *why* quantization cannot proceed (no classically allowed
/// region at all, a single sign change as for a Coulomb tail with no
/// centrifugal barrier, or more than one well).
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument left the domain of the operation (r ≤ 0, sin θ = 0, ...).
    Domain { what: &'static str, value: f64 },
    /// p²(r) < 0 everywhere scanned: no classically allowed region.
    NoClassicalRegion,
    /// Exactly one sign change of p²: the problem has no left turning point
    /// and the two-turning-point quantization condition does not apply.
    SingleTurningPoint,
    /// More than two sign changes of p²: multi-well structure.
    MultiWell { sign_changes: usize },
    /// An iterative scheme hit its iteration cap before reaching tolerance.
    NonConvergence { what: &'static str },
    /// The quantization target exceeds the supremum of the phase integral
    /// over the bound-energy bracket.
    NoBoundState { n_r: u32, l: u32 },
    /// The WKB amplitude 1/√|p| is evaluated too close to a turning point.
    TurningPointSingularity { p_abs: f64, cutoff: f64 },
    /// The converged eigenfunction has the wrong number of interior nodes.
    NodeCountMismatch { requested: u32, found: u32 },
    /// The grid does not extend far enough past the outer turning point for
    /// the wavefunction to decay.
    GridTooSmall {
        r_max: f64,
        outer_turning_point: f64,
    },
    /// A parameter fails its structural invariant (grid too coarse,
    /// non-positive potential parameter, refinement factor < 2, ...).
    InvalidParameter { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => {
                write!(f, "domain error: {what} (got {value})")
            }
            Error::NoClassicalRegion => {
                write!(
                    f,
                    "no classically allowed region bracketed by turning points"
                )
            }
            Error::SingleTurningPoint => {
                write!(
                    f,
                    "exactly one turning point: two-turning-point quantization does not apply"
                )
            }
            Error::MultiWell { sign_changes } => {
                write!(f, "multi-well potential: {sign_changes} sign changes of p²")
            }
            Error::NonConvergence { what } => write!(f, "no convergence: {what}"),
            Error::NoBoundState { n_r, l } => {
                write!(f, "no bound state with n_r = {n_r}, l = {l}")
            }
            Error::TurningPointSingularity { p_abs, cutoff } => {
                write!(f, "|p| = {p_abs} below turning-point cutoff {cutoff}")
            }
            Error::NodeCountMismatch { requested, found } => {
                write!(
                    f,
                    "node count mismatch: requested {requested}, found {found}"
                )
            }
            Error::GridTooSmall {
                r_max,
                outer_turning_point,
            } => {
                write!(
                    f,
                    "grid ends at r = {r_max} but the outer turning point is {outer_turning_point}; \
                     wavefunction not decayed"
                )
            }
            Error::InvalidParameter { what } => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl std::error::Error for Error {}
