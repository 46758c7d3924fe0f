//! Gauss–Legendre quadrature with endpoint-singularity removal.
//!
//! Phase integrals ∫√(p²) dq have inverse-square-root derivative
//! singularities where p² vanishes at the interval ends. The substitution
//! q = a + (b−a) sin²u maps [a, b] to [0, π/2] and turns √(q−a) and √(b−q)
//! factors into smooth functions of u, after which fixed-order composite
//! Gauss–Legendre converges spectrally. Panels are doubled until two
//! successive estimates agree to the requested relative tolerance.

use crate::error::{Error, Result};
use crate::tol;
use std::sync::OnceLock;

/// Order of the Gauss–Legendre rule used on every panel.
const GL_ORDER: usize = 20;

/// Legendre polynomial P_n and its derivative at x, by the three-term
/// recurrence.
fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    // derivative from P_n and P_{n-1}
    let dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1],
/// found by Newton iteration from the Chebyshev initial guess.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 2);
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_deriv(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((x, w));
    }
    rule.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    rule
}

fn gl20() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(GL_ORDER))
}

/// Composite fixed-order Gauss–Legendre over `panels` equal panels of [a, b].
fn composite_gl<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let rule = gl20();
    let h = (b - a) / panels as f64;
    let mut sum = 0.0;
    for k in 0..panels {
        let lo = a + k as f64 * h;
        let mid = lo + 0.5 * h;
        for &(x, w) in rule {
            sum += w * f(mid + 0.5 * h * x);
        }
    }
    sum * 0.5 * h
}

/// Adaptive composite quadrature of a smooth integrand: panel count doubles
/// until two successive estimates agree to `rel_tol` (with a small absolute
/// floor so that integrals that are genuinely zero converge too).
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let mut prev = composite_gl(&f, a, b, 1);
    let mut panels = 2;
    while panels <= tol::MAX_QUAD_PANELS {
        let cur = composite_gl(&f, a, b, panels);
        if (cur - prev).abs() <= rel_tol * cur.abs() + 1e-16 {
            return Ok(cur);
        }
        prev = cur;
        panels *= 2;
    }
    Err(Error::NonConvergence {
        what: "adaptive quadrature panel doubling",
    })
}

/// Integrate f over [a, b] where f may behave like √(x−a) and/or √(b−x) at
/// the ends (the typical √p² phase integrand). Uses x = a + (b−a) sin²u.
pub fn integrate_sqrt_endpoints<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
) -> Result<f64> {
    if !(b >= a) {
        return Err(Error::Domain {
            what: "integration interval reversed",
            value: b - a,
        });
    }
    let width = b - a;
    if width == 0.0 {
        return Ok(0.0);
    }
    let g = |u: f64| {
        let s = u.sin();
        let x = a + width * s * s;
        f(x) * width * (2.0 * u).sin()
    };
    integrate(g, 0.0, std::f64::consts::FRAC_PI_2, rel_tol)
}
