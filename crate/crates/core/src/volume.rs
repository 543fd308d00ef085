//! Fubini-Study volume integration over complex projective charts, the
//! closed-form entangling-manifold volumes, and the simplex measure factors
//! of the mixed-state volume product.
//!
//! A [`Chart`] is a box of real parameters together with an embedding into
//! unit state vectors.  The pullback metric
//! `g_ab = Re[<d_a psi|d_b psi> - <d_a psi|psi><psi|d_b psi>]`
//! is evaluated by central finite differences and `sqrt(det g)` is the
//! volume density integrated over the box.
//!
//! Charts provided:
//!
//! * `cp1` -- `(theta, phi) -> (cos theta, e^{i phi} sin theta)`; total
//!   volume pi.
//! * `cp3-inhomog` -- the inhomogeneous CP^3 patch compactified by
//!   `z_k = tan(u_k) e^{i phi_k}`, so the box is bounded; total volume
//!   pi^3/6.
//! * `cp3-euler` -- the six-angle coset chart built from the SU(4)
//!   factorization head.  Covering ranges for all six parameters are not
//!   pinned down (only `a1 in [0, pi]`, `a3, a5 in [0, 2 pi]` are known, and
//!   the rotations default to `[0, pi/2]`), so its integral is reported as a
//!   ratio against pi^3/6 rather than asserted.

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::euler::CP3_COSET_SEQUENCE;
use crate::linalg::{inner, CMatrix};
use crate::scalar::Scalar;
use crate::Group;

/// Finite-difference step for the pullback metric.
const FD_STEP: f64 = 1e-5;

/// Batch size of the deterministic Monte Carlo substreams.
const MC_BATCH: u64 = 16384;

type Embedding<T> = Box<dyn Fn(&[T]) -> Vec<Complex<T>> + Send + Sync>;

/// Parameter box plus embedding into unit state vectors.
pub struct Chart<T: Scalar> {
    name: String,
    ranges: Vec<[T; 2]>,
    embedding: Embedding<T>,
}

impl<T: Scalar> Chart<T> {
    pub fn new(name: impl Into<String>, ranges: Vec<[T; 2]>, embedding: Embedding<T>) -> Self {
        Self {
            name: name.into(),
            ranges,
            embedding,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn parameter_count(&self) -> usize {
        self.ranges.len()
    }

    pub fn ranges(&self) -> &[[T; 2]] {
        &self.ranges
    }

    /// Unit state vector at the given parameter point.
    pub fn embed(&self, point: &[T]) -> Vec<Complex<T>> {
        (self.embedding)(point)
    }

    /// Volume of the parameter box.
    pub fn box_volume(&self) -> T {
        self.ranges
            .iter()
            .map(|[lo, hi]| *hi - *lo)
            .fold(T::one(), |a, b| a * b)
    }

    /// The sphere chart of CP^1.
    pub fn cp1() -> Self {
        let ranges = vec![[T::zero(), T::FRAC_PI_2()], [T::zero(), T::TAU()]];
        Self::new(
            "cp1",
            ranges,
            Box::new(|p: &[T]| {
                let (theta, phi) = (p[0], p[1]);
                vec![
                    Complex::new(theta.cos(), T::zero()),
                    Complex::from_polar(theta.sin(), phi),
                ]
            }),
        )
    }

    /// Inhomogeneous CP^3 patch in compactified polar coordinates
    /// `(u1, phi1, u2, phi2, u3, phi3)` with `z_k = tan(u_k) e^{i phi_k}`.
    pub fn cp3_inhomogeneous() -> Self {
        let mut ranges = Vec::new();
        for _ in 0..3 {
            ranges.push([T::zero(), T::FRAC_PI_2()]);
            ranges.push([T::zero(), T::TAU()]);
        }
        Self::new(
            "cp3-inhomog",
            ranges,
            Box::new(|p: &[T]| {
                let mut components = vec![Complex::new(T::one(), T::zero())];
                for k in 0..3 {
                    components.push(Complex::from_polar(p[2 * k].tan(), p[2 * k + 1]));
                }
                normalize(components)
            }),
        )
    }

    /// Inhomogeneous CP^3 patch in raw affine coordinates
    /// `(x1, y1, x2, y2, x3, y3)` on the box `[-half_width, half_width]^6`.
    ///
    /// The box does not cover CP^3; this chart exists to compare the
    /// finite-difference density against the closed form
    /// `1 / (1 + |z|^2)^4`.
    pub fn cp3_affine_patch(half_width: T) -> Self {
        let ranges = vec![[-half_width, half_width]; 6];
        Self::new(
            "cp3-affine",
            ranges,
            Box::new(|p: &[T]| {
                let components = vec![
                    Complex::new(T::one(), T::zero()),
                    Complex::new(p[0], p[1]),
                    Complex::new(p[2], p[3]),
                    Complex::new(p[4], p[5]),
                ];
                normalize(components)
            }),
        )
    }

    /// Six-angle Euler coset chart of CP^3 with the default ranges
    /// `a1 in [0, pi]`, `a3, a5 in [0, 2 pi]`, `a2, a4, a6 in [0, pi/2]`.
    pub fn cp3_euler() -> Self {
        let basis = crate::algebra::GellMannBasis::<T>::new(4).expect("dimension 4");
        let templates: Vec<FactorTemplate<T>> = CP3_COSET_SEQUENCE
            .iter()
            .map(|&index| FactorTemplate::new(basis.generator(index).expect("valid index")))
            .collect();
        let pi = T::PI();
        let ranges = vec![
            [T::zero(), pi],
            [T::zero(), T::FRAC_PI_2()],
            [T::zero(), T::TAU()],
            [T::zero(), T::FRAC_PI_2()],
            [T::zero(), T::TAU()],
            [T::zero(), T::FRAC_PI_2()],
        ];
        Self::new(
            "cp3-euler",
            ranges,
            Box::new(move |p: &[T]| {
                let mut state = vec![Complex::new(T::zero(), T::zero()); 4];
                state[0] = Complex::new(T::one(), T::zero());
                // Rightmost factor acts first.
                for (template, &angle) in templates.iter().zip(p).rev() {
                    state = template.apply(angle, &state);
                }
                state
            }),
        )
    }
}

fn normalize<T: Scalar>(mut v: Vec<Complex<T>>) -> Vec<Complex<T>> {
    let norm = crate::linalg::vec_norm(&v);
    for z in v.iter_mut() {
        *z = Complex::new(z.re / norm, z.im / norm);
    }
    v
}

/// Cached eigendecomposition of one generator, for fast application of
/// `exp(i lambda angle)` to state vectors.
struct FactorTemplate<T: Scalar> {
    eigenvalues: Vec<T>,
    vectors: CMatrix<T>,
    adjoint: CMatrix<T>,
}

impl<T: Scalar> FactorTemplate<T> {
    fn new(generator: &CMatrix<T>) -> Self {
        let (eigenvalues, vectors) = generator.hermitian_eigen();
        let adjoint = vectors.adjoint();
        Self {
            eigenvalues,
            vectors,
            adjoint,
        }
    }

    fn apply(&self, angle: T, state: &[Complex<T>]) -> Vec<Complex<T>> {
        let mut w = self.adjoint.matvec(state);
        for (x, mu) in w.iter_mut().zip(&self.eigenvalues) {
            *x = *x * Complex::from_polar(T::one(), *mu * angle);
        }
        self.vectors.matvec(&w)
    }
}

/// Square root of the determinant of the pulled-back Fubini-Study metric at
/// `point`, by central finite differences with step 1e-5 (one-sided at the
/// box boundary).
///
/// Returns `Error::DegeneratePoint` when the differences are not finite;
/// integrators treat that as a flagged sample rather than a failure.
pub fn fs_pullback_density<T: Scalar>(chart: &Chart<T>, point: &[T]) -> Result<T> {
    let k = chart.parameter_count();
    if point.len() != k {
        return Err(Error::WrongArity {
            expected: k,
            got: point.len(),
        });
    }
    let h = T::of(FD_STEP);
    let psi = chart.embed(point);

    let mut derivatives = Vec::with_capacity(k);
    let mut shifted = point.to_vec();
    for a in 0..k {
        let [lo, hi] = chart.ranges()[a];
        let up = (point[a] + h).min(hi);
        let down = (point[a] - h).max(lo);
        shifted[a] = up;
        let plus = chart.embed(&shifted);
        shifted[a] = down;
        let minus = chart.embed(&shifted);
        shifted[a] = point[a];
        let denom = up - down;
        if denom <= T::zero() {
            return Err(Error::DegeneratePoint);
        }
        let deriv: Vec<Complex<T>> = plus
            .iter()
            .zip(&minus)
            .map(|(p, m)| (*p - *m) / Complex::new(denom, T::zero()))
            .collect();
        derivatives.push(deriv);
    }

    let mut gram = CMatrix::<T>::zeros(k);
    for a in 0..k {
        for b in a..k {
            let direct = inner(&derivatives[a], &derivatives[b]);
            let proj = inner(&derivatives[a], &psi) * inner(&psi, &derivatives[b]);
            let value = (direct - proj).re;
            if !value.is_finite() {
                return Err(Error::DegeneratePoint);
            }
            gram[(a, b)] = Complex::new(value, T::zero());
            gram[(b, a)] = Complex::new(value, T::zero());
        }
    }
    let det = gram.det().re;
    if !det.is_finite() {
        return Err(Error::DegeneratePoint);
    }
    Ok(det.max(T::zero()).sqrt())
}

/// Integration scheme for [`integrate_volume`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegrationMethod {
    MonteCarlo,
    TensorGrid,
}

impl std::fmt::Display for IntegrationMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IntegrationMethod::MonteCarlo => write!(f, "monte-carlo"),
            IntegrationMethod::TensorGrid => write!(f, "tensor-grid"),
        }
    }
}

/// Volume estimate with its provenance.
#[derive(Clone, Debug)]
pub struct VolumeEstimate<T> {
    pub value: T,
    pub std_error: T,
    pub samples: u64,
    pub seed: u64,
    pub chart: String,
    pub method: IntegrationMethod,
    /// Samples flagged as degenerate and counted with zero density.
    pub flagged: u64,
}

/// Integrates the Fubini-Study density over the chart box.
///
/// Monte Carlo runs on deterministic per-batch substreams derived from the
/// seed, so a fixed `(seed, samples)` pair yields a bit-identical estimate
/// regardless of how many worker threads execute the batches.
pub fn integrate_volume<T: Scalar>(
    chart: &Chart<T>,
    method: IntegrationMethod,
    samples: u64,
    seed: u64,
) -> Result<VolumeEstimate<T>> {
    if samples < 1000 {
        return Err(Error::InvalidParameter(format!(
            "need at least 1000 samples, got {samples}"
        )));
    }
    match method {
        IntegrationMethod::MonteCarlo => integrate_monte_carlo(chart, samples, seed),
        IntegrationMethod::TensorGrid => integrate_tensor_grid(chart, samples, seed),
    }
}

fn integrate_monte_carlo<T: Scalar>(
    chart: &Chart<T>,
    samples: u64,
    seed: u64,
) -> Result<VolumeEstimate<T>> {
    let k = chart.parameter_count();
    let batches = samples.div_ceil(MC_BATCH);
    let partials: Vec<(T, T, u64)> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b + 1);
            let count = MC_BATCH.min(samples - b * MC_BATCH);
            let mut point = vec![T::zero(); k];
            let mut sum = T::zero();
            let mut sum_sq = T::zero();
            let mut flagged = 0u64;
            for _ in 0..count {
                for (x, [lo, hi]) in point.iter_mut().zip(chart.ranges()) {
                    *x = *lo + (*hi - *lo) * T::of(rng.gen::<f64>());
                }
                match fs_pullback_density(chart, &point) {
                    Ok(d) => {
                        sum = sum + d;
                        sum_sq = sum_sq + d * d;
                    }
                    Err(Error::DegeneratePoint) => flagged += 1,
                    Err(_) => unreachable!("point is always in range"),
                }
            }
            (sum, sum_sq, flagged)
        })
        .collect();

    let mut sum = T::zero();
    let mut sum_sq = T::zero();
    let mut flagged = 0u64;
    for (s, s2, f) in partials {
        sum = sum + s;
        sum_sq = sum_sq + s2;
        flagged += f;
    }
    if flagged == samples {
        return Err(Error::EstimationFailed);
    }
    let n = T::of(samples as f64);
    let vol = chart.box_volume();
    let mean = sum / n;
    let variance = ((sum_sq / n - mean * mean) / (n - T::one())).max(T::zero());
    Ok(VolumeEstimate {
        value: vol * mean,
        std_error: vol * variance.sqrt(),
        samples,
        seed,
        chart: chart.name().to_string(),
        method: IntegrationMethod::MonteCarlo,
        flagged,
    })
}

fn integrate_tensor_grid<T: Scalar>(
    chart: &Chart<T>,
    samples: u64,
    seed: u64,
) -> Result<VolumeEstimate<T>> {
    let k = chart.parameter_count();
    let per_dim = (samples as f64).powf(1.0 / k as f64).floor() as u64;
    if per_dim < 2 {
        return Err(Error::InvalidParameter(format!(
            "sample budget {samples} gives fewer than 2 grid points per dimension"
        )));
    }
    let total = per_dim.pow(k as u32);
    let batches = total.div_ceil(MC_BATCH);
    let partials: Vec<(T, u64)> = (0..batches)
        .into_par_iter()
        .map(|batch| {
            let start = batch * MC_BATCH;
            let mut sum = T::zero();
            let mut flagged = 0u64;
            let mut point = vec![T::zero(); k];
            for flat in start..(start + MC_BATCH).min(total) {
                let mut rest = flat;
                for (x, [lo, hi]) in point.iter_mut().zip(chart.ranges()) {
                    let i = rest % per_dim;
                    rest /= per_dim;
                    let step = (*hi - *lo) / T::of(per_dim as f64);
                    *x = *lo + step * (T::of(i as f64) + T::of(0.5));
                }
                match fs_pullback_density(chart, &point) {
                    Ok(d) => sum = sum + d,
                    Err(Error::DegeneratePoint) => flagged += 1,
                    Err(_) => unreachable!("grid points are always in range"),
                }
            }
            (sum, flagged)
        })
        .collect();
    let mut sum = T::zero();
    let mut flagged = 0u64;
    for (s, f) in partials {
        sum = sum + s;
        flagged += f;
    }
    if flagged == total {
        return Err(Error::EstimationFailed);
    }
    Ok(VolumeEstimate {
        value: chart.box_volume() * sum / T::of(total as f64),
        std_error: T::zero(),
        samples: total,
        seed,
        chart: chart.name().to_string(),
        method: IntegrationMethod::TensorGrid,
        flagged,
    })
}

/// Fubini-Study volume of CP^n: `pi^n / n!`.
pub fn cpn_volume<T: Scalar>(n: usize) -> Result<T> {
    if n < 1 {
        return Err(Error::InvalidParameter("CP^n needs n >= 1".into()));
    }
    let mut factorial = T::one();
    for k in 2..=n {
        factorial = factorial * T::of_usize(k);
    }
    Ok(T::PI().powi(n as i32) / factorial)
}

/// Volume of the entangling manifold: the projective-space volume divided by
/// the residual cumulative-phase volume.  `pi/24` for SU(4), `pi/2400` for
/// SU(6).
///
/// The residual phase is quotiented out as `2 pi * 2 pi` in the SU(4)
/// chain and as `20 pi^4` in the SU(6) chain; "twice a circle volume"
/// would read differently, but the arithmetic here follows the chains that
/// produce these constants.
pub fn entangling_volume<T: Scalar>(group: Group) -> T {
    let pi = T::PI();
    match group {
        // (pi^3/6) / (2 pi * 2 pi)
        Group::Su4 => pi / T::of(24.0),
        // pi^5 / (5! * 20 pi^4)
        Group::Su6 => pi / T::of(2400.0),
    }
}

/// Stored flag-manifold volume entering the mixed-state product measure:
/// `pi^6/12` for SU(4)/U(1)^3, `pi^15/34560` for SU(6)/U(1)^5.
pub fn flag_volume_constant<T: Scalar>(group: Group) -> T {
    let pi = T::PI();
    match group {
        Group::Su4 => pi.powi(6) / T::of(12.0),
        Group::Su6 => pi.powi(15) / T::of(34560.0),
    }
}

/// Simplex measure factor and the resulting mixed-state volume.
#[derive(Clone, Copy, Debug)]
pub struct SymplexFactor<T> {
    pub omega: T,
    pub volume: T,
}

/// Product evaluation of the simplex measure over independent eigenvalue
/// ranges: `omega = alpha_s prod_i (lo_i^s - hi_i^s) / s^k` with `k = 4`
/// (SU(4)) or `k = 6` (SU(6)), times the flag-manifold constant.
pub fn symplex_factor<T: Scalar>(
    group: Group,
    s: T,
    alpha_s: T,
    ranges: &[[T; 2]],
) -> Result<SymplexFactor<T>> {
    if s <= T::zero() || alpha_s <= T::zero() {
        return Err(Error::InvalidParameter(
            "s and alpha_s must be positive".into(),
        ));
    }
    let k = match group {
        Group::Su4 => 4,
        Group::Su6 => 6,
    };
    if ranges.len() != k {
        return Err(Error::WrongArity {
            expected: k,
            got: ranges.len(),
        });
    }
    let mut product = T::one();
    for [lo, hi] in ranges {
        product = product * (lo.powf(s) - hi.powf(s));
    }
    let omega = alpha_s * product / s.powi(k as i32);
    Ok(SymplexFactor {
        omega,
        volume: omega * flag_volume_constant(group),
    })
}

/// Hypothesized upper limit on the simplex range product:
/// `N^{-N s} (N^s - 1)`.
pub fn symplex_bound_upper<T: Scalar>(group: Group, s: T) -> T {
    let n = T::of_usize(group.dimension());
    n.powf(-n * s) * (n.powf(s) - T::one())
}

/// Checks `0 < product < N^{-N s} (N^s - 1)`.
pub fn symplex_bound_check<T: Scalar>(group: Group, s: T, product: T) -> bool {
    product > T::zero() && product < symplex_bound_upper(group, s)
}
