//! Closed-form spectra, determinant identities, phase invariances, and the
//! feasibility-region soundness checks.

use entvol::algebra::generate_basis;
use entvol::bloch::DensityMatrix;
use entvol::entangle::{
    char_constant_su4_family, epsilon0, partial_transpose, ppt_report, su4_mixed_region_sin,
    su4_pt_det, su4_pt_spectrum, tr_rhod_sq_su4, tr_rhod_sq_su6, trace_criterion, Subsystem,
};
use entvol::euler::{
    compose_unitary, conjugate, rho_d_su4, rho_d_su6, su4_euler, EulerFactorization,
};
use entvol::sampling::{random_density, random_unitary, sample_region_branch};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI};

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

#[test]
fn closed_form_spectra_one_and_two_rotation_families() {
    let basis = generate_basis::<f64>(4).unwrap();
    let rho_d = rho_d_su4(&[FRAC_PI_2; 3]).unwrap();
    for k in 1..=100 {
        let angle = k as f64 / 101.0 * FRAC_PI_2;
        let (c, s) = (angle.cos(), angle.sin());
        let expected = sorted(vec![c * c, -c * s, c * s, s * s]);

        // One-rotation family.
        let f = EulerFactorization::new(4, vec![(10, angle)]);
        let u = compose_unitary(&f, &basis).unwrap();
        let rho = conjugate(&u, &rho_d).unwrap();
        let report = ppt_report(&rho, 1e-10).unwrap();
        for (got, want) in report.spectrum.iter().zip(&expected) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!((report.char_constant - char_constant_su4_family(angle)).abs() < 1e-12);

        // Two-rotation family at mu = pi/2.
        let f = EulerFactorization::new(4, vec![(5, FRAC_PI_2), (2, angle)]);
        let u = compose_unitary(&f, &basis).unwrap();
        let rho = conjugate(&u, &rho_d).unwrap();
        let report = ppt_report(&rho, 1e-10).unwrap();
        for (got, want) in report.spectrum.iter().zip(&expected) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!((report.char_constant - char_constant_su4_family(angle)).abs() < 1e-12);
    }
}

#[test]
fn spectrum_is_independent_of_alpha3() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let mut alpha = [0.0_f64; 15];
        alpha[0] = rng.gen::<f64>() * PI;
        alpha[1] = rng.gen::<f64>() * FRAC_PI_2;
        alpha[3] = rng.gen::<f64>() * FRAC_PI_2;
        alpha[4] = rng.gen::<f64>() * 2.0 * PI;
        alpha[5] = rng.gen::<f64>() * FRAC_PI_2;
        let reference = su4_pt_spectrum(&alpha);
        for k in 1..=10 {
            alpha[2] = k as f64 * 0.6;
            let spectrum = su4_pt_spectrum(&alpha);
            for (a, b) in spectrum.iter().zip(&reference) {
                assert!((a - b).abs() < 1e-11);
            }
        }
    }
}

#[test]
fn epsilon0_depends_only_on_eta() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..10 {
        let eta = rng.gen::<f64>() * 2.0 * PI;
        let (a2, a4, a6) = (
            rng.gen::<f64>() * FRAC_PI_2,
            rng.gen::<f64>() * FRAC_PI_2,
            rng.gen::<f64>() * FRAC_PI_2,
        );
        let mut dets = Vec::new();
        for _ in 0..20 {
            // Pick (alpha_1, alpha_5) realizing the same eta = 2 a1 - a5.
            let a1 = rng.gen::<f64>() * PI;
            let a5 = 2.0 * a1 - eta;
            let mut alpha = [0.0_f64; 15];
            alpha[0] = a1;
            alpha[1] = a2;
            alpha[3] = a4;
            alpha[4] = a5;
            alpha[5] = a6;
            dets.push(su4_pt_det(&alpha));
        }
        let spread = dets.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
            - dets.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(
            spread < 1e-11,
            "determinant varies with fixed eta: {spread}"
        );
        let formula = epsilon0(a2, a4, a6, eta);
        assert!((formula.re - dets[0]).abs() < 1e-11);
        assert!(formula.im.abs() < 1e-11);
    }
}

#[test]
fn epsilon0_matches_determinant_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..1000 {
        let a1 = rng.gen::<f64>() * PI;
        let a2 = rng.gen::<f64>() * FRAC_PI_2;
        let a4 = rng.gen::<f64>() * FRAC_PI_2;
        let a5 = rng.gen::<f64>() * 2.0 * PI;
        let a6 = rng.gen::<f64>() * FRAC_PI_2;
        let mut alpha = [0.0_f64; 15];
        alpha[0] = a1;
        alpha[1] = a2;
        alpha[3] = a4;
        alpha[4] = a5;
        alpha[5] = a6;
        let det = su4_pt_det(&alpha);
        let formula = epsilon0(a2, a4, a6, 2.0 * a1 - a5);
        let scale = det.abs().max(1e-3);
        assert!(
            (formula.re - det).abs() / scale < 1e-10,
            "det {det} vs formula {}",
            formula.re
        );
        assert!(formula.im.abs() / scale < 1e-10);
    }
}

#[test]
fn entanglement_verdict_implies_trace_criterion() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let mut entangled_count = 0;
    for _ in 0..10_000 {
        let rho = random_density::<f64, _>(4, Some((2, 2)), &mut rng);
        let report = ppt_report(&rho, 1e-10).unwrap();
        if report.entangled {
            entangled_count += 1;
            assert!(
                trace_criterion(&rho).unwrap(),
                "entangled state below the purity threshold"
            );
        }
        // Negativity and verdict are consistent by construction.
        assert_eq!(report.negativity > 0.0, report.entangled);
    }
    // The flat-simplex ensemble produces plenty of entangled states.
    assert!(entangled_count > 1000, "only {entangled_count} entangled");
}

#[test]
fn local_unitaries_preserve_pt_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for _ in 0..1000 {
        let rho = random_density::<f64, _>(4, Some((2, 2)), &mut rng);
        let ua = random_unitary::<f64, _>(2, &mut rng);
        let ub = random_unitary::<f64, _>(2, &mut rng);
        let u = ua.kron(&ub);
        let rotated = conjugate(&u, &rho).unwrap();
        let before = partial_transpose(&rho, Subsystem::B)
            .unwrap()
            .hermitian_eigenvalues();
        let after = partial_transpose(&rotated, Subsystem::B)
            .unwrap()
            .hermitian_eigenvalues();
        for (a, b) in before.iter().zip(&after) {
            assert!((a - b).abs() < 1e-11);
        }
    }
}

#[test]
fn region_branches_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    for branch in 1..=6u8 {
        for _ in 0..10_000 {
            let s = sample_region_branch::<f64, _>(branch, &mut rng);
            assert_eq!(su4_mixed_region_sin(s), Some(branch));
            let theta = [s[0].asin(), s[1].asin(), s[2].asin()];
            let tr = tr_rhod_sq_su4(&theta).unwrap();
            assert!(
                tr > 1.0 / 3.0,
                "branch {branch} point {s:?} has Tr[rho^2] = {tr}"
            );
        }
    }
}

#[test]
fn purity_formulas_match_direct_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..1000 {
        let theta: Vec<f64> = (0..3).map(|_| rng.gen::<f64>() * FRAC_PI_2).collect();
        let direct = rho_d_su4(&theta).unwrap().purity();
        assert!((tr_rhod_sq_su4(&theta).unwrap() - direct).abs() < 1e-12);
    }
    for _ in 0..1000 {
        let theta: Vec<f64> = (0..5).map(|_| rng.gen::<f64>() * FRAC_PI_2).collect();
        let direct = rho_d_su6(&theta).unwrap().purity();
        assert!((tr_rhod_sq_su6(&theta).unwrap() - direct).abs() < 1e-12);
    }
}

#[test]
fn purity_invariant_under_conjugation() {
    let basis = generate_basis::<f64>(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(48);
    for _ in 0..100 {
        let theta: Vec<f64> = (0..3).map(|_| rng.gen::<f64>() * FRAC_PI_2).collect();
        let rho = rho_d_su4(&theta).unwrap();
        let alpha: Vec<f64> = (0..15).map(|_| rng.gen::<f64>() * PI).collect();
        let u = compose_unitary(&su4_euler(&alpha).unwrap(), &basis).unwrap();
        let rotated = conjugate(&u, &rho).unwrap();
        assert!((rotated.purity() - rho.purity()).abs() < 1e-12);
    }
}

#[test]
fn six_by_six_ppt_report_works() {
    // Qubit/qutrit maximally entangled state has negativity; the maximally
    // mixed state does not.
    let mut psi = vec![num_complex::Complex::new(0.0, 0.0); 6];
    // (|0,0> + |1,1>)/sqrt(2) in the 2x3 product basis.
    psi[0] = num_complex::Complex::new(1.0 / 2.0_f64.sqrt(), 0.0);
    psi[4] = num_complex::Complex::new(1.0 / 2.0_f64.sqrt(), 0.0);
    let rho = DensityMatrix::new(entvol::linalg::CMatrix::outer(&psi), Some((2, 3))).unwrap();
    let report = ppt_report(&rho, 1e-10).unwrap();
    assert!(report.entangled);
    assert!(report.negativity > 0.4);
    assert!(trace_criterion(&rho).unwrap());

    let mixed = DensityMatrix::new(
        entvol::linalg::CMatrix::identity(6).scale_re(1.0 / 6.0),
        Some((2, 3)),
    )
    .unwrap();
    let report = ppt_report(&mixed, 1e-10).unwrap();
    assert!(!report.entangled);
    assert!(!trace_criterion(&mixed).unwrap());
}
