//! Property-based checks: structural invariants that must hold over whole
//! parameter boxes rather than at pinned points.  Kept deliberately small;
//! pointwise accuracy lives in the unit suites and the acceptance gate.

use genfun_core::expansions::coeff_a;
use genfun_core::expansions::{find, geometry, CoeffSequence, Point, SzegoPoint};
use genfun_core::hyp2f1::hyp2f1;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn geometry_satisfies_its_algebraic_identities(
        rho in 0.01f64..0.95,
        x in -1.0f64..=1.0,
    ) {
        let g = geometry(rho, x).unwrap();
        prop_assert!(g.big_r >= 1.0 - rho - 1e-15);
        prop_assert!(g.big_r <= 1.0 + rho + 1e-15);

        let diff = g.zeta_plus * g.zeta_plus - g.zeta_minus * g.zeta_minus;
        let diff_expected = 4.0 * rho / (g.big_r * g.big_r);
        prop_assert!((diff - diff_expected).abs() <= 1e-13 * diff_expected);

        let product = g.zeta_plus * g.zeta_minus;
        let product_expected = (1.0 - rho * rho) / (g.big_r * g.big_r);
        prop_assert!((product - product_expected).abs() <= 1e-13 * product_expected);
    }

    #[test]
    fn szego_map_round_trips(rho in 0.005f64..0.99) {
        let z = (1.0 + rho * rho) / (2.0 * rho);
        let p = SzegoPoint::new(z).unwrap();
        prop_assert!((p.rho_equiv - rho).abs() <= 1e-10 * rho);
    }

    #[test]
    fn pfaff_transformation_holds(
        a in -3.0f64..3.0,
        b in -3.0f64..3.0,
        c in 0.3f64..6.0,
        z in -0.5f64..0.45,
    ) {
        let direct = hyp2f1(a, b, c, z).unwrap();
        let transformed = (1.0 - z).powf(-a) * hyp2f1(a, c - b, c, z / (z - 1.0)).unwrap();
        prop_assert!(
            (direct - transformed).abs() <= 1e-9 * direct.abs().max(1.0),
            "2F1({}, {}; {}; {}) = {} but the Pfaff map gives {}",
            a, b, c, z, direct, transformed,
        );
    }

    // Plus-branch coefficients are strictly positive on this box, so a
    // plain relative comparison between the O(1) recurrence update and the
    // direct gamma-product assembly is well posed.
    #[test]
    fn theorem_coefficient_sequence_matches_pointwise(
        alpha in -0.45f64..1.4,
        beta in -0.45f64..1.4,
        m in 0u32..=6,
        rho in 0.05f64..0.6,
    ) {
        let mut seq = CoeffSequence::theorem(m, alpha, beta, rho).unwrap();
        for n in 0..25 {
            let direct = coeff_a(n, m, alpha, beta, rho).unwrap();
            let from_seq = seq.next_coeff();
            prop_assert!(
                (from_seq - direct).abs() <= 1e-9 * direct,
                "n = {}: sequence {} vs direct {}",
                n, from_seq, direct,
            );
        }
    }

    #[test]
    fn legendre_series_is_deterministic_and_converges(
        m in 0u32..=5,
        rho in 0.05f64..0.6,
        x in -0.95f64..0.95,
    ) {
        let spec = find("exp.legendre.plus").unwrap();
        let p = Point { m, rho, x, ..Point::default() };
        let first = spec.series(&p, 1e-9).unwrap();
        let second = spec.series(&p, 1e-9).unwrap();
        prop_assert_eq!(first.value.to_bits(), second.value.to_bits());
        prop_assert_eq!(first.terms_used, second.terms_used);

        let closed = spec.lhs(&p).unwrap();
        prop_assert!(closed.is_finite() && first.value.is_finite());
        prop_assert!((first.value - closed).abs() <= 1e-6 * closed.abs().max(1.0));
    }
}
