//! Euler-angle factorizations of SU(4) and SU(6).
//!
//! A factorization is an ordered list of `(generator index, angle)` pairs;
//! the composed unitary is the product of `exp(i lambda_k alpha)` factors in
//! the listed order, so the leftmost factor is applied last to a ket.
//!
//! The SU(4) sequence is
//! `l3 l2 l3 l5 l3 l10 l3 l2 l3 l5 l3 l2 l3 l8 l15` (15 parameters).  The
//! SU(6) product uses 24 live parameters: the coset head
//! `l3 l2 l3 l5 l3 l10 l3 l17 l3 l26`, eleven `l3` phases, and the diagonal
//! tail `l15 l24 l35`.  Angle ranges are not enforced; covering ranges are a
//! property of the volume charts, not of the group operations.

use num_complex::Complex;

use crate::algebra::GellMannBasis;
use crate::bloch::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::scalar::Scalar;

/// Generator sequence of the SU(4) factorization.
pub const SU4_GENERATOR_SEQUENCE: [usize; 15] = [3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2, 3, 8, 15];

/// Generator sequence of the SU(6) factorization (live slots only).
pub const SU6_GENERATOR_SEQUENCE: [usize; 24] = [
    3, 2, 3, 5, 3, 10, 3, 17, 3, 26, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 15, 24, 35,
];

/// Generator sequence of the CP^3 coset chart (first six SU(4) factors).
pub const CP3_COSET_SEQUENCE: [usize; 6] = [3, 2, 3, 5, 3, 10];

/// Ordered product of one-parameter exponentials.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerFactorization<T> {
    dimension: usize,
    factors: Vec<(usize, T)>,
}

impl<T: Scalar> EulerFactorization<T> {
    pub fn new(dimension: usize, factors: Vec<(usize, T)>) -> Self {
        Self { dimension, factors }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// `(generator index, angle)` pairs in product order.
    pub fn factors(&self) -> &[(usize, T)] {
        &self.factors
    }
}

/// `exp(i lambda_index angle)` through the eigendecomposition of the
/// (Hermitian) generator, which is exact for these fixed matrices.
pub fn generator_exponential<T: Scalar>(
    index: usize,
    angle: T,
    basis: &GellMannBasis<T>,
) -> Result<CMatrix<T>> {
    let lambda = basis.generator(index)?;
    Ok(exp_i_hermitian(lambda, angle))
}

/// `exp(i h angle)` for Hermitian `h` via `V diag(e^{i mu angle}) V^dagger`.
pub(crate) fn exp_i_hermitian<T: Scalar>(h: &CMatrix<T>, angle: T) -> CMatrix<T> {
    let (values, vectors) = h.hermitian_eigen();
    let n = h.dim();
    let mut phased = CMatrix::zeros(n);
    for c in 0..n {
        let phase = Complex::from_polar(T::one(), values[c] * angle);
        for r in 0..n {
            phased[(r, c)] = vectors[(r, c)] * phase;
        }
    }
    phased.mul(&vectors.adjoint())
}

/// Composes the factorization left-to-right: the first listed factor is the
/// leftmost matrix of the product.
pub fn compose_unitary<T: Scalar>(
    f: &EulerFactorization<T>,
    basis: &GellMannBasis<T>,
) -> Result<CMatrix<T>> {
    if basis.dimension() != f.dimension() {
        return Err(Error::DimensionMismatch {
            expected: f.dimension(),
            got: basis.dimension(),
        });
    }
    let mut u = CMatrix::identity(f.dimension());
    for &(index, angle) in f.factors() {
        u = u.mul(&generator_exponential(index, angle, basis)?);
    }
    Ok(u)
}

/// Full 15-parameter SU(4) factorization.
pub fn su4_euler<T: Scalar>(alpha: &[T]) -> Result<EulerFactorization<T>> {
    if alpha.len() != 15 {
        return Err(Error::WrongArity {
            expected: 15,
            got: alpha.len(),
        });
    }
    let factors = SU4_GENERATOR_SEQUENCE
        .iter()
        .zip(alpha)
        .map(|(&g, &a)| (g, a))
        .collect();
    Ok(EulerFactorization::new(4, factors))
}

/// 24-parameter SU(6) factorization.
///
/// The angle list follows the displayed product order; in the 35-slot
/// numbering these are slots 1..=11, the odd slots 13..=31, and 33, 34, 35.
pub fn su6_euler<T: Scalar>(alpha: &[T]) -> Result<EulerFactorization<T>> {
    if alpha.len() != 24 {
        return Err(Error::WrongArity {
            expected: 24,
            got: alpha.len(),
        });
    }
    let factors = SU6_GENERATOR_SEQUENCE
        .iter()
        .zip(alpha)
        .map(|(&g, &a)| (g, a))
        .collect();
    Ok(EulerFactorization::new(6, factors))
}

/// Diagonal two-qubit state from three simplex angles:
/// `diag(s1^2 s2^2 s3^2, c1^2 s2^2 s3^2, c2^2 s3^2, c3^2)` in terms of
/// `sin^2`/`cos^2` of the angles.  The trace is 1 identically.
pub fn rho_d_su4<T: Scalar>(theta: &[T]) -> Result<DensityMatrix<T>> {
    if theta.len() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            got: theta.len(),
        });
    }
    let s: Vec<T> = theta.iter().map(|t| t.sin() * t.sin()).collect();
    let c: Vec<T> = theta.iter().map(|t| t.cos() * t.cos()).collect();
    let entries = [s[0] * s[1] * s[2], c[0] * s[1] * s[2], c[1] * s[2], c[2]];
    Ok(diagonal_density(&entries, Some((2, 2))))
}

/// Diagonal qubit/qutrit state from five simplex angles.
pub fn rho_d_su6<T: Scalar>(theta: &[T]) -> Result<DensityMatrix<T>> {
    if theta.len() != 5 {
        return Err(Error::WrongArity {
            expected: 5,
            got: theta.len(),
        });
    }
    let s: Vec<T> = theta.iter().map(|t| t.sin() * t.sin()).collect();
    let c: Vec<T> = theta.iter().map(|t| t.cos() * t.cos()).collect();
    let entries = [
        s[0] * s[1] * s[2] * s[3] * s[4],
        c[0] * s[1] * s[2] * s[3] * s[4],
        c[1] * s[2] * s[3] * s[4],
        c[2] * s[3] * s[4],
        c[3] * s[4],
        c[4],
    ];
    Ok(diagonal_density(&entries, Some((2, 3))))
}

fn diagonal_density<T: Scalar>(
    entries: &[T],
    bipartition: Option<(usize, usize)>,
) -> DensityMatrix<T> {
    let mut m = CMatrix::zeros(entries.len());
    for (i, &p) in entries.iter().enumerate() {
        m[(i, i)] = Complex::new(p, T::zero());
    }
    DensityMatrix::trusted(m, bipartition)
}

/// Conjugation `U rho U^dagger`.  Spectrum and purity are preserved.
pub fn conjugate<T: Scalar>(u: &CMatrix<T>, rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
    if u.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            got: u.dim(),
        });
    }
    let m = u.mul(rho.matrix()).mul(&u.adjoint());
    Ok(DensityMatrix::trusted(m, rho.bipartition()))
}

/// Pure state of the CP^3 coset chart: the six-factor head of the SU(4)
/// product applied to `e_1 = (1, 0, 0, 0)`.
pub fn cp3_coset_state<T: Scalar>(alpha: &[T]) -> Result<Vec<Complex<T>>> {
    if alpha.len() != 6 {
        return Err(Error::WrongArity {
            expected: 6,
            got: alpha.len(),
        });
    }
    let basis = GellMannBasis::new(4)?;
    let factors = CP3_COSET_SEQUENCE
        .iter()
        .zip(alpha)
        .map(|(&g, &a)| (g, a))
        .collect();
    let u = compose_unitary(&EulerFactorization::new(4, factors), &basis)?;
    let mut e1 = vec![Complex::new(T::zero(), T::zero()); 4];
    e1[0] = Complex::new(T::one(), T::zero());
    Ok(u.matvec(&e1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generate_basis;
    use crate::bloch::bell_density;
    use num_complex::Complex;

    fn basis4() -> GellMannBasis<f64> {
        generate_basis(4).unwrap()
    }

    #[test]
    fn lambda10_exponential_is_a_plane_rotation() {
        let basis = basis4();
        let a = 0.37_f64;
        let u = generator_exponential(10, a, &basis).unwrap();
        let mut expected: CMatrix<f64> = CMatrix::identity(4);
        expected[(0, 0)] = Complex::new(a.cos(), 0.0);
        expected[(3, 3)] = Complex::new(a.cos(), 0.0);
        expected[(0, 3)] = Complex::new(a.sin(), 0.0);
        expected[(3, 0)] = Complex::new(-a.sin(), 0.0);
        assert!(u.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn zero_angle_gives_identity() {
        let basis = basis4();
        for index in 1..=15 {
            let u = generator_exponential(index, 0.0, &basis).unwrap();
            assert!(u.max_abs_diff(&CMatrix::identity(4)) < 1e-14);
        }
        assert!(generator_exponential(16, 0.0, &basis).is_err());
    }

    #[test]
    fn lambda3_exponential_is_diagonal_phase() {
        let basis = basis4();
        let a = 1.1_f64;
        let u = generator_exponential(3, a, &basis).unwrap();
        let mut expected: CMatrix<f64> = CMatrix::identity(4);
        expected[(0, 0)] = Complex::from_polar(1.0, a);
        expected[(1, 1)] = Complex::from_polar(1.0, -a);
        assert!(u.max_abs_diff(&expected) < 1e-13);
    }

    #[test]
    fn empty_factorization_composes_to_identity() {
        let basis = basis4();
        let f = EulerFactorization::new(4, vec![]);
        let u = compose_unitary(&f, &basis).unwrap();
        assert!(u.max_abs_diff(&CMatrix::identity(4)) < 1e-15);
    }

    #[test]
    fn lambda5_lambda2_product_matches_matrix_form() {
        let basis = basis4();
        let (mu, nu) = (0.3_f64, 0.7_f64);
        let f = EulerFactorization::new(4, vec![(5, mu), (2, nu)]);
        let u = compose_unitary(&f, &basis).unwrap();
        let (cm, sm, cn, sn) = (mu.cos(), mu.sin(), nu.cos(), nu.sin());
        let rows = [
            [cm * cn, cm * sn, sm, 0.0],
            [-sn, cn, 0.0, 0.0],
            [-cn * sm, -sm * sn, cm, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ];
        for r in 0..4 {
            for c in 0..4 {
                assert!((u[(r, c)].re - rows[r][c]).abs() < 1e-14);
                assert!(u[(r, c)].im.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn su4_euler_arity_and_identity() {
        assert!(su4_euler(&[0.0; 14]).is_err());
        let basis = basis4();
        let u = compose_unitary(&su4_euler(&[0.0; 15]).unwrap(), &basis).unwrap();
        assert!(u.max_abs_diff(&CMatrix::identity(4)) < 1e-13);
    }

    #[test]
    fn su4_euler_generates_bell_two_and_three() {
        let basis = basis4();
        let rho_d = rho_d_su4(&[std::f64::consts::FRAC_PI_2; 3]).unwrap();

        // alpha_6 = pi/4, rest zero -> second Bell state.
        let mut alpha = [0.0_f64; 15];
        alpha[5] = std::f64::consts::FRAC_PI_4;
        let u = compose_unitary(&su4_euler(&alpha).unwrap(), &basis).unwrap();
        let rho = conjugate(&u, &rho_d).unwrap();
        let bell2 = bell_density::<f64>(2).unwrap();
        assert!(rho.matrix().max_abs_diff(bell2.matrix()) < 1e-12);

        // alpha_2 = pi/2, alpha_4 = pi/4 -> third Bell state.
        let mut alpha = [0.0_f64; 15];
        alpha[1] = std::f64::consts::FRAC_PI_2;
        alpha[3] = std::f64::consts::FRAC_PI_4;
        let u = compose_unitary(&su4_euler(&alpha).unwrap(), &basis).unwrap();
        let rho = conjugate(&u, &rho_d).unwrap();
        let bell3 = bell_density::<f64>(3).unwrap();
        assert!(rho.matrix().max_abs_diff(bell3.matrix()) < 1e-12);
    }

    #[test]
    fn su6_euler_arity_and_identity() {
        assert!(su6_euler(&[0.0; 35]).is_err());
        let basis = generate_basis::<f64>(6).unwrap();
        let u = compose_unitary(&su6_euler(&[0.0; 24]).unwrap(), &basis).unwrap();
        assert!(u.max_abs_diff(&CMatrix::identity(6)) < 1e-13);
    }

    #[test]
    fn rho_d_su4_values() {
        let hp = std::f64::consts::FRAC_PI_2;
        let rho = rho_d_su4(&[hp, hp, hp]).unwrap();
        assert_eq!(rho.matrix()[(0, 0)].re, 1.0);
        for i in 1..4 {
            assert!(rho.matrix()[(i, i)].norm() < 1e-30);
        }
        let rho = rho_d_su4(&[0.4, 1.1, 0.9]).unwrap();
        let total: f64 = (0..4).map(|i| rho.matrix()[(i, i)].re).sum();
        assert!((total - 1.0).abs() < 1e-15);
        assert!(rho_d_su4(&[0.0; 2]).is_err());
    }

    #[test]
    fn rho_d_su6_values() {
        let hp = std::f64::consts::FRAC_PI_2;
        let rho = rho_d_su6(&[hp; 5]).unwrap();
        assert_eq!(rho.matrix()[(0, 0)].re, 1.0);
        let rho = rho_d_su6(&[0.3, 0.8, 1.2, 0.5, 1.0]).unwrap();
        let total: f64 = (0..6).map(|i| rho.matrix()[(i, i)].re).sum();
        assert!((total - 1.0).abs() < 1e-15);
        for i in 0..6 {
            assert!(rho.matrix()[(i, i)].re >= 0.0);
        }
        assert!(rho_d_su6(&[0.0; 3]).is_err());
    }

    #[test]
    fn conjugation_by_lambda10_rotation() {
        let basis = basis4();
        let a = 0.62_f64;
        let u = generator_exponential(10, a, &basis).unwrap();
        let rho_d = rho_d_su4(&[std::f64::consts::FRAC_PI_2; 3]).unwrap();
        let rho = conjugate(&u, &rho_d).unwrap();
        let (c, s) = (a.cos(), a.sin());
        assert!((rho.matrix()[(0, 0)].re - c * c).abs() < 1e-14);
        assert!((rho.matrix()[(3, 3)].re - s * s).abs() < 1e-14);
        assert!((rho.matrix()[(0, 3)].re + c * s).abs() < 1e-14);
        assert!((rho.matrix()[(3, 0)].re + c * s).abs() < 1e-14);
        assert!((rho.purity() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn conjugation_identity_and_mismatch() {
        let basis = basis4();
        let rho = bell_density::<f64>(1).unwrap();
        let id = CMatrix::identity(4);
        let same = conjugate(&id, &rho).unwrap();
        assert!(same.matrix().max_abs_diff(rho.matrix()) < 1e-15);
        let u6 = compose_unitary(
            &su6_euler(&[0.0; 24]).unwrap(),
            &generate_basis::<f64>(6).unwrap(),
        )
        .unwrap();
        assert!(conjugate(&u6, &rho).is_err());
        // A factorization composed against a basis of the wrong dimension.
        assert!(compose_unitary(&su6_euler(&[0.0; 24]).unwrap(), &basis).is_err());
    }

    #[test]
    fn coset_state_examples() {
        let e1 = cp3_coset_state(&[0.0_f64; 6]).unwrap();
        assert!((e1[0].re - 1.0).abs() < 1e-14);
        for z in &e1[1..] {
            assert!(z.norm() < 1e-14);
        }
        let a = std::f64::consts::FRAC_PI_4;
        let v = cp3_coset_state(&[0.0, 0.0, 0.0, 0.0, 0.0, a]).unwrap();
        assert!((v[0].re - a.cos()).abs() < 1e-14);
        assert!((v[3].re + a.sin()).abs() < 1e-14);
        assert!(v[1].norm() < 1e-14 && v[2].norm() < 1e-14);
        assert!(cp3_coset_state(&[0.0; 5]).is_err());
    }
}
