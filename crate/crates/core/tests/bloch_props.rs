//! Round-trip and purity properties of the coherence-vector map.

use entvol::algebra::generate_basis;
use entvol::bloch::{coherence_vector, density_from_coherence, is_pure};
use entvol::linalg::CMatrix;
use entvol::sampling::{random_density, random_pure_density};
use entvol::Group;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn round_trip_on_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for group in [Group::Su4, Group::Su6] {
        let n = group.dimension();
        let basis = generate_basis::<f64>(n).unwrap();
        for _ in 0..100 {
            let rho = random_density::<f64, _>(n, Some(group.bipartition()), &mut rng);
            let v = coherence_vector(&rho, &basis).unwrap();
            let back = density_from_coherence(&v, &basis).unwrap();
            assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-12);
        }
    }
}

#[test]
fn purity_flag_agrees_with_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for group in [Group::Su4, Group::Su6] {
        let n = group.dimension();
        let basis = generate_basis::<f64>(n).unwrap();
        for _ in 0..100 {
            let pure = random_pure_density::<f64, _>(n, None, &mut rng);
            let v = coherence_vector(&pure, &basis).unwrap();
            assert!(is_pure(&v, &basis, 1e-9).unwrap());
            assert!((pure.eigenvalues()[n - 1] - 1.0).abs() < 1e-10);

            let mixed = random_density::<f64, _>(n, None, &mut rng);
            let v = coherence_vector(&mixed, &basis).unwrap();
            let top = mixed.eigenvalues()[n - 1];
            assert_eq!(is_pure(&v, &basis, 1e-9).unwrap(), (top - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn purity_equals_norm_identity() {
    // Tr[rho^2] = (1/N)(1 + (N-1) |n|^2)
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for group in [Group::Su4, Group::Su6] {
        let n = group.dimension();
        let basis = generate_basis::<f64>(n).unwrap();
        for _ in 0..50 {
            let rho = random_density::<f64, _>(n, None, &mut rng);
            let v = coherence_vector(&rho, &basis).unwrap();
            let norm_sq = v.norm() * v.norm();
            let lhs = rho.purity();
            let rhs = (1.0 + (n as f64 - 1.0) * norm_sq) / n as f64;
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }
}

#[test]
fn coset_states_reconstruct_to_rank_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let basis = generate_basis::<f64>(4).unwrap();
    for _ in 0..50 {
        let angles: Vec<f64> = (0..6)
            .map(|_| rand::Rng::gen::<f64>(&mut rng) * std::f64::consts::PI)
            .collect();
        let psi = entvol::euler::cp3_coset_state(&angles).unwrap();
        let rho = entvol::bloch::DensityMatrix::new(CMatrix::outer(&psi), Some((2, 2))).unwrap();
        let v = coherence_vector(&rho, &basis).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-12);
        let back = density_from_coherence(&v, &basis).unwrap();
        let eigs = back.eigenvalues();
        assert!((eigs[3] - 1.0).abs() < 1e-10);
        for e in &eigs[..3] {
            assert!(e.abs() < 1e-10);
        }
    }
}
