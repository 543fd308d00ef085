//! Seeded generators for random states, unitaries and region points.
//!
//! Everything here is driven by a caller-supplied RNG so that test and
//! verification runs are reproducible.

use num_complex::Complex;
use rand::Rng;

use crate::bloch::DensityMatrix;
use crate::entangle::{region_s1_lower, region_s1_upper};
use crate::entangle::{region_s2_bound_strict, region_s2_bound_weak, region_s3_bound};
use crate::linalg::{inner, vec_norm, CMatrix};
use crate::scalar::Scalar;

/// Standard normal via Box-Muller.
fn normal<T: Scalar, R: Rng>(rng: &mut R) -> T {
    let u1: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.gen();
    T::of((-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos())
}

fn ginibre<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> CMatrix<T> {
    CMatrix::from_fn(n, |_, _| Complex::new(normal(rng), normal(rng)))
}

/// Haar-distributed random unitary: QR of a Ginibre matrix by modified
/// Gram-Schmidt (the diagonal of R comes out positive, which fixes the
/// phases correctly).
pub fn random_unitary<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> CMatrix<T> {
    let g = ginibre::<T, R>(n, rng);
    let mut cols: Vec<Vec<Complex<T>>> = (0..n)
        .map(|c| (0..n).map(|r| g[(r, c)]).collect())
        .collect();
    for c in 0..n {
        for prev in 0..c {
            let overlap = inner(&cols[prev], &cols[c]);
            for r in 0..cols[c].len() {
                let sub = cols[prev][r] * overlap;
                cols[c][r] = cols[c][r] - sub;
            }
        }
        let norm = Complex::new(vec_norm(&cols[c]), T::zero());
        for entry in cols[c].iter_mut() {
            *entry = *entry / norm;
        }
    }
    CMatrix::from_fn(n, |r, c| cols[c][r])
}

/// Random pure state: first column of a Haar unitary.
pub fn random_pure_state<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> Vec<Complex<T>> {
    let u = random_unitary::<T, R>(n, rng);
    (0..n).map(|r| u[(r, 0)]).collect()
}

/// Uniform point on the probability simplex (flat Dirichlet), by normalized
/// exponentials.
pub fn random_simplex<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> Vec<T> {
    let mut weights: Vec<T> = (0..n)
        .map(|_| -T::of(rng.gen::<f64>().max(f64::MIN_POSITIVE).ln()))
        .collect();
    let total = weights.iter().fold(T::zero(), |a, b| a + *b);
    for w in weights.iter_mut() {
        *w = *w / total;
    }
    weights
}

/// Random mixed state: flat-simplex eigenvalues conjugated by a Haar
/// unitary.
pub fn random_density<T: Scalar, R: Rng>(
    n: usize,
    bipartition: Option<(usize, usize)>,
    rng: &mut R,
) -> DensityMatrix<T> {
    let eigenvalues = random_simplex::<T, R>(n, rng);
    let u = random_unitary::<T, R>(n, rng);
    let mut diag = CMatrix::zeros(n);
    for (i, p) in eigenvalues.iter().enumerate() {
        diag[(i, i)] = Complex::new(*p, T::zero());
    }
    let m = u.mul(&diag).mul(&u.adjoint());
    DensityMatrix::trusted(m, bipartition)
}

/// Random pure density matrix.
pub fn random_pure_density<T: Scalar, R: Rng>(
    n: usize,
    bipartition: Option<(usize, usize)>,
    rng: &mut R,
) -> DensityMatrix<T> {
    let psi = random_pure_state::<T, R>(n, rng);
    DensityMatrix::trusted(CMatrix::outer(&psi), bipartition)
}

/// Uniform sample of `(sin t1, sin t2, sin t3)` strictly inside the given
/// feasibility branch (1..=6).
///
/// Branches 1 and 2 fix `sin t1` to their critical constants; the other
/// coordinates are drawn uniformly between the branch bounds, shrunk by a
/// hair so that strict inequalities hold.
pub fn sample_region_branch<T: Scalar, R: Rng>(branch: u8, rng: &mut R) -> [T; 3] {
    let eps = T::of(1e-9);
    let one = T::one();
    let draw = |rng: &mut R, lo: T, hi: T| {
        let u = T::of(rng.gen::<f64>());
        let lo = lo + eps;
        let hi = hi - eps;
        lo + (hi - lo) * u
    };
    let z_min = T::of(3.0).sqrt() / T::of(2.0);
    let y_min = T::of(0.79);
    let inv_sqrt2 = one / T::of(2.0).sqrt();
    let upper = region_s1_upper::<T>();
    let lower = region_s1_lower::<T>();
    match branch {
        1 => {
            let x = upper;
            let y = draw(rng, region_s2_bound_strict(x), one);
            let z = draw(rng, z_min, one);
            [x, y, z]
        }
        2 => {
            let x = lower;
            let y = draw(rng, region_s2_bound_weak(x), one);
            let z = draw(rng, z_min, one);
            [x, y, z]
        }
        3 => {
            let x = draw(rng, inv_sqrt2, lower);
            let y = draw(rng, y_min, region_s2_bound_weak(x));
            let z = draw(rng, region_s3_bound(x, y), one);
            [x, y, z]
        }
        4 => {
            let x = draw(rng, upper, one);
            let y = draw(rng, y_min, one);
            let z = draw(rng, z_min, one);
            [x, y, z]
        }
        5 => {
            let x = draw(rng, lower, upper);
            let y = draw(rng, y_min, one);
            let z = draw(rng, z_min, one);
            [x, y, z]
        }
        6 => {
            let x = draw(rng, inv_sqrt2, lower);
            let y = draw(rng, region_s2_bound_weak(x), one);
            let z = draw(rng, z_min, one);
            [x, y, z]
        }
        _ => panic!("branch index {branch} out of range 1..=6"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [2, 4, 6] {
            let u = random_unitary::<f64, _>(n, &mut rng);
            assert!(u.is_unitary(1e-12));
        }
    }

    #[test]
    fn random_density_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let rho = random_density::<f64, _>(4, Some((2, 2)), &mut rng);
        rho.validate(1e-10).unwrap();
        let pure = random_pure_density::<f64, _>(6, Some((2, 3)), &mut rng);
        pure.validate(1e-10).unwrap();
        assert!((pure.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn simplex_sums_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let p = random_simplex::<f64, _>(6, &mut rng);
        let total: f64 = p.iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert!(p.iter().all(|x| *x > 0.0));
    }

    #[test]
    fn branch_samples_classify_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for branch in 1..=6u8 {
            for _ in 0..50 {
                let s = sample_region_branch::<f64, _>(branch, &mut rng);
                let got = crate::entangle::su4_mixed_region_sin(s);
                assert_eq!(got, Some(branch), "sines {s:?}");
            }
        }
    }
}
