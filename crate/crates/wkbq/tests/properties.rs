//! Randomized property tests for the invariants that hold across parameter
//! space (not just at the hand-picked acceptance points).

use proptest::prelude::*;
use wkbq::angular::{angular_phase_closed_form, angular_phase_integral, AngularContext};
use wkbq::potentials::{CentrifugalMode, PhysicalConstants, PotentialModel};
use wkbq::quantize::{closed_form_phase_integral, phase_integral, RadialContext};
use wkbq::spectrum::{RowStatus, SpectrumRow, SpectrumTable};

const C: PhysicalConstants = PhysicalConstants {
    hbar: 1.0,
    mass: 1.0,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The Coulomb phase integral is strictly increasing in E over the
    /// bound bracket (min V_eff, 0).
    #[test]
    fn coulomb_phase_integral_monotone(l in 0u32..4, a in 0.02f64..0.95, delta in 0.01f64..0.3) {
        let lam2 = (l as f64 + 0.5) * (l as f64 + 0.5);
        let v_min = -1.0 / (2.0 * lam2);
        let e1 = v_min * (1.0 - a);
        let e2 = e1 * (1.0 - delta);
        prop_assume!(e2 < 0.0 && e2 > e1);
        let i1 = phase_integral(&RadialContext::new(
            PotentialModel::Coulomb { e2: 1.0 }, C, e1, l, CentrifugalMode::Langer)).unwrap();
        let i2 = phase_integral(&RadialContext::new(
            PotentialModel::Coulomb { e2: 1.0 }, C, e2, l, CentrifugalMode::Langer)).unwrap();
        prop_assert!(i2 > i1, "I({e2}) = {i2} not above I({e1}) = {i1}");
    }

    /// Quadrature agrees with the analytic phase integral wherever the
    /// integrand squared is rational (Coulomb and the oscillator), for any
    /// centrifugal mode.
    #[test]
    fn rational_closed_forms_match_quadrature(
        l in 0u32..4,
        frac in 0.05f64..0.9,
        oscillator in any::<bool>(),
        langer in any::<bool>(),
    ) {
        let mode = if langer { CentrifugalMode::Langer } else { CentrifugalMode::Schrodinger };
        prop_assume!(l > 0 || langer); // plain modes at l = 0 have one turning point
        let (model, energy) = if oscillator {
            let lam = mode.centrifugal_coefficient(l, 1.0).sqrt();
            (PotentialModel::Harmonic3D { omega: 1.0 }, lam + 0.2 + 6.0 * frac)
        } else {
            let lam2 = mode.centrifugal_coefficient(l, 1.0);
            (PotentialModel::Coulomb { e2: 1.0 }, -(1.0 - frac) / (2.0 * lam2))
        };
        let ctx = RadialContext::new(model, C, energy, l, mode);
        let closed = closed_form_phase_integral(&ctx);
        prop_assume!(closed.is_some_and(|v| v > 1e-3));
        let closed = closed.unwrap();
        let quad = phase_integral(&ctx).unwrap();
        prop_assert!(
            (quad - closed).abs() / closed <= 1e-8,
            "{}: quad {quad} vs closed {closed}", model.name()
        );
    }

    /// The angular phase integral equals π(√M² − |M_z|) and depends on M_z
    /// only through its magnitude.
    #[test]
    fn angular_integral_identity(m2 in 0.25f64..400.0, frac in 0.0f64..0.98, flip in any::<bool>()) {
        let m_z = frac * m2.sqrt() * if flip { -1.0 } else { 1.0 };
        let ctx = AngularContext::new(m2, m_z, C);
        let quad = angular_phase_integral(&ctx).unwrap();
        let closed = angular_phase_closed_form(&ctx).unwrap();
        let scale = std::f64::consts::PI * m2.sqrt();
        prop_assert!((quad - closed).abs() <= 1e-9 * scale);
        let mirrored = angular_phase_integral(&AngularContext::new(m2, -m_z, C)).unwrap();
        prop_assert_eq!(quad, mirrored);
    }

    /// Spectrum tables survive a JSON round trip exactly, whatever is in
    /// them.
    #[test]
    fn spectrum_json_round_trip(
        rows in proptest::collection::vec(
            (0u32..20, 0u32..10, any::<f64>(), any::<f64>(), any::<bool>()), 0..12)
    ) {
        let rows: Vec<SpectrumRow> = rows.into_iter().map(|(n_r, l, a, b, has)| {
            prop_assume!(a.is_finite() && b.is_finite());
            Ok(SpectrumRow {
                n_r,
                l,
                e_wkb: Some(a),
                e_analytic: has.then_some(b),
                e_oracle: None,
                abs_err: has.then_some((a - b).abs()),
                rel_err: None,
                status: if has { RowStatus::Ok } else { RowStatus::NoAnalytic },
            })
        }).collect::<Result<_, _>>()?;
        let table = SpectrumTable { potential: "coulomb".into(), mode: "langer".into(), rows };
        let back: SpectrumTable = serde_json::from_str(&table.to_json()).unwrap();
        prop_assert_eq!(back, table);
    }
}
