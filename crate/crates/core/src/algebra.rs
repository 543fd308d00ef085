//! Generalized Gell-Mann bases for su(N) and their structure tensors.
//!
//! The generators are ordered column-by-column: for each column `j = 2..=N`
//! and each row `i < j` the symmetric pair generator comes first, then the
//! antisymmetric one, and the column is closed by the diagonal generator of
//! dimension `j`.  With 1-based numbering this puts
//!
//! * the symmetric `(i, j)` generator at `(j-1)^2 + 2(i-1)`,
//! * the antisymmetric `(i, j)` generator at `(j-1)^2 + 2(i-1) + 1`,
//! * the diagonal generator of dimension `j` at `j^2 - 1`,
//!
//! which reproduces the familiar SU(2) and SU(3) matrices and places the
//! antisymmetric `(1, j)` family at indices 2, 5, 10, 17, 26, ...  The
//! normalization is `Tr[lambda_i lambda_j] = 2 delta_ij`.
//!
//! For general N this ordering is inferred: it is the unique extension of
//! the standard N = 4 matrices that keeps the `(1, j)` rotation generators
//! at `(j-1)^2 + 1`, which is what the Euler factorizations in
//! [`crate::euler`] rely on.

use std::sync::OnceLock;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{check_dimension, CMatrix};
use crate::scalar::Scalar;

/// Ordered set of the `N^2 - 1` traceless Hermitian generators of su(N).
#[derive(Debug)]
pub struct GellMannBasis<T: Scalar> {
    dimension: usize,
    generators: Vec<CMatrix<T>>,
    tensors: OnceLock<StructureTensors<T>>,
}

impl<T: Scalar> GellMannBasis<T> {
    /// Builds the basis for su(N), `N >= 2`.
    pub fn new(n: usize) -> Result<Self> {
        check_dimension(n)?;
        let count = n * n - 1;
        let mut generators = vec![CMatrix::zeros(n); count];
        let one = T::one();
        let two = T::of(2.0);

        for j in 2..=n {
            for i in 1..j {
                // 0-based matrix coordinates of the (i, j) pair.
                let (r, c) = (i - 1, j - 1);
                let mut sym = CMatrix::zeros(n);
                sym[(r, c)] = Complex::new(one, T::zero());
                sym[(c, r)] = Complex::new(one, T::zero());
                generators[symmetric_index(i, j) - 1] = sym;

                let mut anti = CMatrix::zeros(n);
                anti[(r, c)] = Complex::new(T::zero(), -one);
                anti[(c, r)] = Complex::new(T::zero(), one);
                generators[antisymmetric_index(i, j) - 1] = anti;
            }
            // diag(1, ..., 1, -(j-1), 0, ..., 0) scaled to Tr[l^2] = 2.
            let jm1 = T::of_usize(j - 1);
            let norm = (two / (T::of_usize(j) * jm1)).sqrt();
            let mut diag = CMatrix::zeros(n);
            for k in 0..j - 1 {
                diag[(k, k)] = Complex::new(norm, T::zero());
            }
            diag[(j - 1, j - 1)] = Complex::new(-norm * jm1, T::zero());
            generators[diagonal_index(j) - 1] = diag;
        }

        Ok(Self {
            dimension: n,
            generators,
            tensors: OnceLock::new(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of generators, `N^2 - 1`.
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Generator `lambda_index` (1-based).
    pub fn generator(&self, lambda_index: usize) -> Result<&CMatrix<T>> {
        if lambda_index == 0 || lambda_index > self.generators.len() {
            return Err(Error::IndexOutOfRange {
                index: lambda_index,
                max: self.generators.len(),
            });
        }
        Ok(&self.generators[lambda_index - 1])
    }

    pub fn generators(&self) -> &[CMatrix<T>] {
        &self.generators
    }

    /// Structure tensors of the algebra, computed once and cached.
    pub fn structure_tensors(&self) -> &StructureTensors<T> {
        self.tensors
            .get_or_init(|| StructureTensors::from_basis(self))
    }
}

/// Builds the Gell-Mann basis for su(N).
pub fn generate_basis<T: Scalar>(n: usize) -> Result<GellMannBasis<T>> {
    GellMannBasis::new(n)
}

/// 1-based index of the symmetric `(i, j)` generator, `1 <= i < j`.
pub fn symmetric_index(i: usize, j: usize) -> usize {
    (j - 1) * (j - 1) + 2 * (i - 1)
}

/// 1-based index of the antisymmetric `(i, j)` generator, `1 <= i < j`.
pub fn antisymmetric_index(i: usize, j: usize) -> usize {
    (j - 1) * (j - 1) + 2 * (i - 1) + 1
}

/// 1-based index of the diagonal generator of dimension `j`, `2 <= j <= N`.
pub fn diagonal_index(j: usize) -> usize {
    j * j - 1
}

/// Totally symmetric (`d`) and totally antisymmetric (`c`) structure
/// coefficients, indexed 1-based in each slot.
#[derive(Clone, Debug)]
pub struct StructureTensors<T> {
    m: usize,
    d: Vec<T>,
    c: Vec<T>,
}

impl<T: Scalar> StructureTensors<T> {
    /// Trace projection: `d + i c = Tr[l_i l_j l_k] / 2`.
    fn from_basis(basis: &GellMannBasis<T>) -> Self {
        let m = basis.generator_count();
        let n = basis.dimension();
        let half = T::of(0.5);
        let mut d = vec![T::zero(); m * m * m];
        let mut c = vec![T::zero(); m * m * m];
        for i in 0..m {
            for j in 0..m {
                let prod = basis.generators[i].mul(&basis.generators[j]);
                for k in 0..m {
                    // Tr[prod * l_k] without forming the product matrix.
                    let lk = &basis.generators[k];
                    let mut tr = Complex::new(T::zero(), T::zero());
                    for a in 0..n {
                        for b in 0..n {
                            tr = tr + prod[(a, b)] * lk[(b, a)];
                        }
                    }
                    let idx = (i * m + j) * m + k;
                    d[idx] = tr.re * half;
                    c[idx] = tr.im * half;
                }
            }
        }
        Self { m, d, c }
    }

    /// Number of generators each index ranges over.
    pub fn generator_count(&self) -> usize {
        self.m
    }

    /// Symmetric coefficient `d_ijk` (1-based indices).
    pub fn d(&self, i: usize, j: usize, k: usize) -> T {
        self.d[((i - 1) * self.m + (j - 1)) * self.m + (k - 1)]
    }

    /// Antisymmetric coefficient `c_ijk` (1-based indices).
    pub fn c(&self, i: usize, j: usize, k: usize) -> T {
        self.c[((i - 1) * self.m + (j - 1)) * self.m + (k - 1)]
    }
}

/// Computes the structure tensors of a basis (also cached on the basis).
pub fn structure_tensors<T: Scalar>(basis: &GellMannBasis<T>) -> StructureTensors<T> {
    basis.structure_tensors().clone()
}

/// Expansion of `l_i l_j` over the identity and the generators.
#[derive(Clone, Debug)]
pub struct ProductExpansion<T> {
    /// Coefficient of the identity: `(2/N) delta_ij`.
    pub identity_coefficient: T,
    /// Coefficient of `lambda_k`: `d_ijk + i c_ijk` (position `k-1`).
    pub lambda_coefficients: Vec<Complex<T>>,
}

/// Expands the product `l_i l_j = (2/N) delta_ij 1 + (d_ijk + i c_ijk) l_k`.
pub fn expand_product<T: Scalar>(
    i: usize,
    j: usize,
    basis: &GellMannBasis<T>,
) -> Result<ProductExpansion<T>> {
    let m = basis.generator_count();
    for index in [i, j] {
        if index == 0 || index > m {
            return Err(Error::IndexOutOfRange { index, max: m });
        }
    }
    let tensors = basis.structure_tensors();
    let identity_coefficient = if i == j {
        T::of(2.0) / T::of_usize(basis.dimension())
    } else {
        T::zero()
    };
    let lambda_coefficients = (1..=m)
        .map(|k| Complex::new(tensors.d(i, j, k), tensors.c(i, j, k)))
        .collect();
    Ok(ProductExpansion {
        identity_coefficient,
        lambda_coefficients,
    })
}

/// Rebuilds `l_i l_j` from an expansion; used to check reconstruction residuals.
pub fn expansion_residual<T: Scalar>(i: usize, j: usize, basis: &GellMannBasis<T>) -> Result<T> {
    let expansion = expand_product(i, j, basis)?;
    let n = basis.dimension();
    let mut rebuilt =
        CMatrix::identity(n).scale(Complex::new(expansion.identity_coefficient, T::zero()));
    for (k, coeff) in expansion.lambda_coefficients.iter().enumerate() {
        rebuilt = rebuilt.add(&basis.generators()[k].scale(*coeff));
    }
    let direct = basis.generator(i)?.mul(basis.generator(j)?);
    Ok(rebuilt.max_abs_diff(&direct))
}
