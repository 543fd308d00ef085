//! Coherence-vector representation of density matrices.
//!
//! An N-dimensional density matrix is written as
//! `rho = (1/N) (1 + sqrt(N(N-1)/2) n . lambda)` with a real vector `n` of
//! length `N^2 - 1`; pure states satisfy `n.n = 1` and (for `N >= 3`)
//! `n * n = n` under the star product built from the symmetric structure
//! coefficients.

use num_complex::Complex;

use crate::algebra::GellMannBasis;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::scalar::Scalar;

/// Real coherence vector of length `N^2 - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceVector<T> {
    dimension: usize,
    n: Vec<T>,
}

impl<T: Scalar> CoherenceVector<T> {
    pub fn new(dimension: usize, n: Vec<T>) -> Result<Self> {
        if n.len() != dimension * dimension - 1 {
            return Err(Error::WrongArity {
                expected: dimension * dimension - 1,
                got: n.len(),
            });
        }
        Ok(Self { dimension, n })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn components(&self) -> &[T] {
        &self.n
    }

    /// Component `n_i` (1-based, matching the generator numbering).
    pub fn component(&self, i: usize) -> T {
        self.n[i - 1]
    }

    pub fn norm(&self) -> T {
        self.n
            .iter()
            .map(|x| *x * *x)
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }
}

/// Hermitian unit-trace matrix with optional bipartition metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix<T: Scalar> {
    matrix: CMatrix<T>,
    bipartition: Option<(usize, usize)>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Wraps a matrix after checking Hermiticity and unit trace.
    ///
    /// Positivity is deliberately not enforced here; use [`Self::validate`]
    /// when a full density-matrix check is wanted.
    pub fn new(matrix: CMatrix<T>, bipartition: Option<(usize, usize)>) -> Result<Self> {
        let tol = T::validation_tol();
        if !matrix.is_hermitian(tol) {
            return Err(Error::InvalidDensityMatrix("not Hermitian".into()));
        }
        let tr = matrix.trace();
        if (tr.re - T::one()).abs() > tol || tr.im.abs() > tol {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace is {} + {}i, not 1",
                tr.re, tr.im
            )));
        }
        if let Some((da, db)) = bipartition {
            if da * db != matrix.dim() {
                return Err(Error::DimensionMismatch {
                    expected: matrix.dim(),
                    got: da * db,
                });
            }
        }
        Ok(Self {
            matrix,
            bipartition,
        })
    }

    /// Internal constructor for matrices that are Hermitian and unit-trace
    /// by construction.
    pub(crate) fn trusted(matrix: CMatrix<T>, bipartition: Option<(usize, usize)>) -> Self {
        Self {
            matrix,
            bipartition,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn bipartition(&self) -> Option<(usize, usize)> {
        self.bipartition
    }

    /// Returns a copy tagged with the given bipartition.
    pub fn with_bipartition(&self, da: usize, db: usize) -> Result<Self> {
        if da * db != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: da * db,
            });
        }
        Ok(Self {
            matrix: self.matrix.clone(),
            bipartition: Some((da, db)),
        })
    }

    pub fn eigenvalues(&self) -> Vec<T> {
        self.matrix.hermitian_eigenvalues()
    }

    /// `Tr[rho^2]`.
    pub fn purity(&self) -> T {
        self.matrix.mul(&self.matrix).trace().re
    }

    /// Full density-matrix check: Hermitian, unit trace, eigenvalues down to
    /// `-psd_tol`.
    pub fn validate(&self, psd_tol: T) -> Result<()> {
        let tol = T::validation_tol();
        if !self.matrix.is_hermitian(tol) {
            return Err(Error::InvalidDensityMatrix("not Hermitian".into()));
        }
        let tr = self.matrix.trace();
        if (tr.re - T::one()).abs() > tol || tr.im.abs() > tol {
            return Err(Error::InvalidDensityMatrix("trace differs from 1".into()));
        }
        let min = self.eigenvalues()[0];
        if min < -psd_tol {
            return Err(Error::InvalidDensityMatrix(format!(
                "negative eigenvalue {min}"
            )));
        }
        Ok(())
    }
}

/// Scaling between `rho` and `n`: `sqrt(N(N-1)/2)`.
fn state_scale<T: Scalar>(n: usize) -> T {
    (T::of_usize(n) * T::of_usize(n - 1) / T::of(2.0)).sqrt()
}

/// Projects a density matrix onto its coherence vector,
/// `n_i = sqrt(N / (2(N-1))) Tr[rho lambda_i]`.
pub fn coherence_vector<T: Scalar>(
    rho: &DensityMatrix<T>,
    basis: &GellMannBasis<T>,
) -> Result<CoherenceVector<T>> {
    let n = basis.dimension();
    if rho.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: rho.dim(),
        });
    }
    let factor = (T::of_usize(n) / (T::of(2.0) * T::of_usize(n - 1))).sqrt();
    let components = basis
        .generators()
        .iter()
        .map(|lambda| rho.matrix().mul(lambda).trace().re * factor)
        .collect();
    CoherenceVector::new(n, components)
}

/// Rebuilds `rho = (1/N)(1 + sqrt(N(N-1)/2) n . lambda)`.
///
/// The result is Hermitian with unit trace for any real `n`; positivity is
/// not guaranteed and must be checked by the caller when it matters.
pub fn density_from_coherence<T: Scalar>(
    n: &CoherenceVector<T>,
    basis: &GellMannBasis<T>,
) -> Result<DensityMatrix<T>> {
    let dim = basis.dimension();
    if n.dimension() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: n.dimension(),
        });
    }
    let scale = state_scale::<T>(dim);
    let mut m = CMatrix::identity(dim);
    for (k, lambda) in basis.generators().iter().enumerate() {
        m = m.add(&lambda.scale(Complex::new(scale * n.components()[k], T::zero())));
    }
    let m = m.scale_re(T::one() / T::of_usize(dim));
    Ok(DensityMatrix::trusted(m, None))
}

/// Star product `(a * b)_k = sqrt(N(N-1)/2) / (N-2) d_ijk a_i b_j`.
///
/// Undefined at `N = 2`, where the `1/(N-2)` factor is singular.
pub fn star_product<T: Scalar>(a: &[T], b: &[T], basis: &GellMannBasis<T>) -> Result<Vec<T>> {
    let n = basis.dimension();
    if n == 2 {
        return Err(Error::SingularDimension);
    }
    let m = basis.generator_count();
    for v in [a, b] {
        if v.len() != m {
            return Err(Error::WrongArity {
                expected: m,
                got: v.len(),
            });
        }
    }
    let tensors = basis.structure_tensors();
    let factor = state_scale::<T>(n) / T::of_usize(n - 2);
    let mut out = vec![T::zero(); m];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let w = *ai * *bj;
            for (k, o) in out.iter_mut().enumerate() {
                *o = *o + w * tensors.d(i + 1, j + 1, k + 1);
            }
        }
    }
    for o in out.iter_mut() {
        *o = *o * factor;
    }
    Ok(out)
}

/// Pure-state test: `|n.n - 1| <= tol` and, for `N >= 3`,
/// `||n * n - n||_inf <= tol`.  At `N = 2` the star condition is skipped.
pub fn is_pure<T: Scalar>(
    n: &CoherenceVector<T>,
    basis: &GellMannBasis<T>,
    tol: T,
) -> Result<bool> {
    if n.dimension() != basis.dimension() {
        return Err(Error::DimensionMismatch {
            expected: basis.dimension(),
            got: n.dimension(),
        });
    }
    let dot = n
        .components()
        .iter()
        .map(|x| *x * *x)
        .fold(T::zero(), |a, b| a + b);
    if (dot - T::one()).abs() > tol {
        return Ok(false);
    }
    if basis.dimension() == 2 {
        return Ok(true);
    }
    let star = star_product(n.components(), n.components(), basis)?;
    let max_dev = star
        .iter()
        .zip(n.components())
        .map(|(s, x)| (*s - *x).abs())
        .fold(T::zero(), |a, b| a.max(b));
    Ok(max_dev <= tol)
}

/// Density matrix of the k-th Bell state (EPR pair), `k = 1..=4`.
///
/// Entries are exact: 1/2 on the corner pattern for k = 1, 2 and on the
/// central 2x2 block for k = 3, 4, with the minus signs of the odd pairs.
pub fn bell_density<T: Scalar>(k: usize) -> Result<DensityMatrix<T>> {
    let h = T::of(0.5);
    let mut m = CMatrix::zeros(4);
    let set = |m: &mut CMatrix<T>, r: usize, c: usize, v: T| {
        m[(r, c)] = Complex::new(v, T::zero());
    };
    match k {
        1 | 2 => {
            let off = if k == 1 { h } else { -h };
            set(&mut m, 0, 0, h);
            set(&mut m, 3, 3, h);
            set(&mut m, 0, 3, off);
            set(&mut m, 3, 0, off);
        }
        3 | 4 => {
            let off = if k == 3 { h } else { -h };
            set(&mut m, 1, 1, h);
            set(&mut m, 2, 2, h);
            set(&mut m, 1, 2, off);
            set(&mut m, 2, 1, off);
        }
        _ => return Err(Error::BellIndexOutOfRange(k)),
    }
    Ok(DensityMatrix::trusted(m, Some((2, 2))))
}

/// Angle between orthogonal states in the coherence-vector picture:
/// `arccos(-1/(N-1))`.
pub fn orthogonality_angle<T: Scalar>(n: usize) -> Result<T> {
    crate::linalg::check_dimension(n)?;
    Ok((-T::one() / T::of_usize(n - 1)).acos())
}
