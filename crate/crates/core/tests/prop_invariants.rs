//! Property-based invariants over arbitrary inputs.

use entvol::algebra::{expansion_residual, generate_basis};
use entvol::bloch::{coherence_vector, density_from_coherence};
use entvol::entangle::{tr_rhod_sq_su4, trace_criterion};
use entvol::euler::{compose_unitary, rho_d_su4, su4_euler};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_expansion_reconstructs(i in 1usize..=15, j in 1usize..=15) {
        let basis = generate_basis::<f64>(4).unwrap();
        prop_assert!(expansion_residual(i, j, &basis).unwrap() < 1e-12);
    }

    #[test]
    fn su4_factorization_is_unitary(angles in prop::collection::vec(-10.0f64..10.0, 15)) {
        let basis = generate_basis::<f64>(4).unwrap();
        let u = compose_unitary(&su4_euler(&angles).unwrap(), &basis).unwrap();
        prop_assert!(u.is_unitary(1e-11));
        let det = u.det();
        prop_assert!((det.re - 1.0).abs() < 1e-11 && det.im.abs() < 1e-11);
    }

    #[test]
    fn diagonal_round_trip(t1 in 0.0f64..std::f64::consts::FRAC_PI_2,
                           t2 in 0.0f64..std::f64::consts::FRAC_PI_2,
                           t3 in 0.0f64..std::f64::consts::FRAC_PI_2) {
        let basis = generate_basis::<f64>(4).unwrap();
        let rho = rho_d_su4(&[t1, t2, t3]).unwrap();
        let v = coherence_vector(&rho, &basis).unwrap();
        let back = density_from_coherence(&v, &basis).unwrap();
        prop_assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-12);
        // The norm bound |n| <= 1 holds for every valid state.
        prop_assert!(v.norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn purity_threshold_consistency(t1 in 0.0f64..std::f64::consts::FRAC_PI_2,
                                    t2 in 0.0f64..std::f64::consts::FRAC_PI_2,
                                    t3 in 0.0f64..std::f64::consts::FRAC_PI_2) {
        let theta = [t1, t2, t3];
        let rho = rho_d_su4(&theta).unwrap();
        let above = trace_criterion(&rho).unwrap();
        prop_assert_eq!(above, tr_rhod_sq_su4(&theta).unwrap() > 1.0 / 3.0);
    }
}
