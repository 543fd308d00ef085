//! Small dense complex matrices.
//!
//! Everything in this crate works on matrices of dimension at most 8, so the
//! implementation favors clarity and determinism over asymptotics: naive
//! multiplication, cyclic Jacobi for Hermitian eigenproblems, LU with partial
//! pivoting for determinants.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Square complex matrix, row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> CMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex::new(T::zero(), T::zero()); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Builds a matrix from rows of `(re, im)` pairs.
    pub fn from_rows(rows: &[Vec<(T, T)>]) -> Self {
        let n = rows.len();
        Self::from_fn(n, |r, c| Complex::new(rows[r][c].0, rows[r][c].1))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimensions must agree");
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                for c in 0..n {
                    out[(r, c)] = out[(r, c)] + a * rhs[(k, c)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.n, v.len());
        let mut out = vec![Complex::new(T::zero(), T::zero()); self.n];
        for r in 0..self.n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for c in 0..self.n {
                acc = acc + self[(r, c)] * v[c];
            }
            out[r] = acc;
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |r, c| self[(c, r)])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        Self::from_fn(self.n, |r, c| self[(r, c)] + rhs[(r, c)])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        Self::from_fn(self.n, |r, c| self[(r, c)] - rhs[(r, c)])
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self::from_fn(self.n, |r, c| self[(r, c)] * factor)
    }

    pub fn scale_re(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    pub fn trace(&self) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for i in 0..self.n {
            acc = acc + self[(i, i)];
        }
        acc
    }

    /// Kronecker product `self (x) rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (na, nb) = (self.n, rhs.n);
        Self::from_fn(na * nb, |r, c| {
            self[(r / nb, c / nb)] * rhs[(r % nb, c % nb)]
        })
    }

    /// Outer product `v v^dagger` of a column vector.
    pub fn outer(v: &[Complex<T>]) -> Self {
        Self::from_fn(v.len(), |r, c| v[r] * v[c].conj())
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> T {
        assert_eq!(self.n, rhs.n);
        let mut m = T::zero();
        for i in 0..self.data.len() {
            let d = (self.data[i] - rhs.data[i]).norm();
            if d > m {
                m = d;
            }
        }
        m
    }

    pub fn max_abs(&self) -> T {
        let mut m = T::zero();
        for z in &self.data {
            let d = z.norm();
            if d > m {
                m = d;
            }
        }
        m
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        for r in 0..self.n {
            for c in r..self.n {
                if (self[(r, c)] - self[(c, r)].conj()).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.adjoint()
            .mul(self)
            .max_abs_diff(&Self::identity(self.n))
            <= tol
    }

    /// Determinant via LU factorization with partial pivoting.
    pub fn det(&self) -> Complex<T> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = Complex::new(T::one(), T::zero());
        for col in 0..n {
            let mut pivot = col;
            let mut best = a[col * n + col].norm_sqr();
            for row in col + 1..n {
                let mag = a[row * n + col].norm_sqr();
                if mag > best {
                    best = mag;
                    pivot = row;
                }
            }
            if best.is_zero() {
                return Complex::new(T::zero(), T::zero());
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let d = a[col * n + col];
            det = det * d;
            for row in col + 1..n {
                let factor = a[row * n + col] / d;
                for k in col..n {
                    let sub = factor * a[col * n + k];
                    a[row * n + k] = a[row * n + k] - sub;
                }
            }
        }
        det
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<T> {
        self.hermitian_eigen().0
    }

    /// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi.
    ///
    /// Returns `(values, vectors)` with eigenvalues ascending and eigenvectors
    /// as the columns of `vectors`, so `self = V diag(values) V^dagger`.
    pub fn hermitian_eigen(&self) -> (Vec<T>, CMatrix<T>) {
        let n = self.n;
        let mut a = self.clone();
        let mut v = Self::identity(n);
        let scale = self.frobenius_norm().max(T::one());
        let stop = T::epsilon() * T::epsilon() * scale * scale;

        for _sweep in 0..60 {
            let mut off = T::zero();
            for p in 0..n {
                for q in p + 1..n {
                    off = off + a[(p, q)].norm_sqr();
                }
            }
            if off <= stop {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    jacobi_rotate(&mut a, &mut v, p, q);
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| {
            a[(i, i)]
                .re
                .partial_cmp(&a[(j, j)].re)
                .expect("eigenvalues are finite")
        });
        let values: Vec<T> = order.iter().map(|&i| a[(i, i)].re).collect();
        let vectors = Self::from_fn(n, |r, c| v[(r, order[c])]);
        (values, vectors)
    }
}

/// One Jacobi rotation zeroing the (p, q) entry of Hermitian `a`,
/// accumulated into `v`.
fn jacobi_rotate<T: Scalar>(a: &mut CMatrix<T>, v: &mut CMatrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b <= T::epsilon() * (a[(p, p)].re.abs() + a[(q, q)].re.abs() + T::epsilon()) {
        return;
    }
    // Phase that makes the (p, q) entry real, then a real Jacobi angle.
    let u = apq / Complex::new(b, T::zero());
    let tau = (a[(q, q)].re - a[(p, p)].re) / (b + b);
    let t = {
        let sign = if tau < T::zero() { -T::one() } else { T::one() };
        sign / (tau.abs() + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    // Columns of the 2x2 unitary: [c, s*u; -s*conj(u), c] applied on the
    // right to (p, q) columns and its adjoint on the left to (p, q) rows.
    let n = a.dim();
    let su = Complex::new(s, T::zero()) * u;
    let cc = Complex::new(c, T::zero());

    for r in 0..n {
        let arp = a[(r, p)];
        let arq = a[(r, q)];
        a[(r, p)] = arp * cc - arq * su.conj();
        a[(r, q)] = arp * su + arq * cc;
    }
    for col in 0..n {
        let apc = a[(p, col)];
        let aqc = a[(q, col)];
        a[(p, col)] = apc * cc - aqc * su;
        a[(q, col)] = apc * su.conj() + aqc * cc;
    }
    a[(p, q)] = Complex::new(T::zero(), T::zero());
    a[(q, p)] = Complex::new(T::zero(), T::zero());

    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = vrp * cc - vrq * su.conj();
        v[(r, q)] = vrp * su + vrq * cc;
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (r, c): (usize, usize)) -> &Complex<T> {
        &self.data[r * self.n + c]
    }
}

impl<T: Scalar> std::ops::IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[r * self.n + c]
    }
}

/// Inner product `<a|b>` with the physics convention (conjugate-linear in `a`).
pub fn inner<T: Scalar>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    assert_eq!(a.len(), b.len());
    let mut acc = Complex::new(T::zero(), T::zero());
    for (x, y) in a.iter().zip(b) {
        acc = acc + x.conj() * *y;
    }
    acc
}

pub fn vec_norm<T: Scalar>(v: &[Complex<T>]) -> T {
    v.iter()
        .map(|z| z.norm_sqr())
        .fold(T::zero(), |a, b| a + b)
        .sqrt()
}

/// Checks that `n` is a sane Hilbert-space dimension for this crate.
pub fn check_dimension(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidDimension(n))
    } else {
        Ok(())
    }
}
