//! Partial-transpose entanglement tests and the closed forms attached to the
//! SU(4) entangling families.
//!
//! Supported bipartitions are 2x2 and 2x3, where a negative eigenvalue of
//! the partial transpose is equivalent to entanglement.  The trace criterion
//! `Tr[rho^2] > 1/3` (two qubits) resp. `> 1/5` (qubit/qutrit) is a
//! *necessary* condition only: every state inside the purity ball
//! `Tr[rho^2] <= 1/3` is separable, while states above the threshold can
//! still be separable (pure product states reach purity 1).
//!
//! No closed-form eigenvalue or determinant expansion is exposed for the
//! qubit/qutrit factorization: two of the six partial-transpose eigenvalues
//! vanish identically, which makes the characteristic constant useless, and
//! the cumulative phase there is only known up to an equivalence; the 2x3
//! checks run on the numeric spectrum instead.

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bloch::DensityMatrix;
use crate::error::{Error, Result};
use crate::euler::{conjugate, rho_d_su4, su4_euler};
use crate::linalg::CMatrix;
use crate::scalar::Scalar;

/// Which tensor factor the partial transpose acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Partial transpose of a bipartite density matrix.
///
/// The result is Hermitian with unit trace but in general not positive;
/// transposing A or B yields matrices with identical spectra.
pub fn partial_transpose<T: Scalar>(
    rho: &DensityMatrix<T>,
    subsystem: Subsystem,
) -> Result<CMatrix<T>> {
    let (da, db) = rho.bipartition().ok_or(Error::MissingBipartition)?;
    let n = rho.dim();
    let m = rho.matrix();
    let idx = |a: usize, b: usize| a * db + b;
    let mut out = CMatrix::zeros(n);
    for a in 0..da {
        for ap in 0..da {
            for b in 0..db {
                for bp in 0..db {
                    let src = match subsystem {
                        Subsystem::B => m[(idx(a, bp), idx(ap, b))],
                        Subsystem::A => m[(idx(ap, b), idx(a, bp))],
                    };
                    out[(idx(a, b), idx(ap, bp))] = src;
                }
            }
        }
    }
    Ok(out)
}

fn check_supported(da: usize, db: usize) -> Result<()> {
    match (da, db) {
        (2, 2) | (2, 3) | (3, 2) => Ok(()),
        _ => Err(Error::UnsupportedBipartition { da, db }),
    }
}

/// Spectrum, negativity, characteristic constant and verdict of the
/// partial-transpose test.
#[derive(Clone, Debug)]
pub struct PptReport<T> {
    /// Eigenvalues of `rho^pt`, ascending.
    pub spectrum: Vec<T>,
    /// Sum of the magnitudes of the negative eigenvalues.
    pub negativity: T,
    /// Constant term of the characteristic polynomial of `rho^pt`, equal to
    /// `det(rho^pt)` in these even dimensions.
    pub char_constant: T,
    /// True when the smallest eigenvalue lies below `-tol`.
    pub entangled: bool,
}

/// Runs the partial-transpose test on a 2x2 or 2x3 state.
///
/// The default transposed subsystem is B; the spectrum does not depend on
/// that choice.
pub fn ppt_report<T: Scalar>(rho: &DensityMatrix<T>, tol: T) -> Result<PptReport<T>> {
    let (da, db) = rho.bipartition().ok_or(Error::MissingBipartition)?;
    check_supported(da, db)?;
    let pt = partial_transpose(rho, Subsystem::B)?;
    let spectrum = pt.hermitian_eigenvalues();
    let negativity = spectrum
        .iter()
        .filter(|x| **x < -tol)
        .map(|x| -*x)
        .fold(T::zero(), |a, b| a + b);
    let entangled = spectrum[0] < -tol;
    let char_constant = pt.det().re;
    Ok(PptReport {
        spectrum,
        negativity,
        char_constant,
        entangled,
    })
}

/// Constant term of the characteristic polynomial for the one-rotation
/// entangling family: `-cos^4(alpha) sin^4(alpha)`.
pub fn char_constant_su4_family<T: Scalar>(alpha: T) -> T {
    let c = alpha.cos();
    let s = alpha.sin();
    -c.powi(4) * s.powi(4)
}

/// Necessary trace condition for entanglement: `Tr[rho^2] > 1/3` on 2x2,
/// `Tr[rho^2] > 1/5` on 2x3.  States below the threshold are certainly
/// separable; states above it may or may not be entangled.
pub fn trace_criterion<T: Scalar>(rho: &DensityMatrix<T>) -> Result<bool> {
    let (da, db) = rho.bipartition().ok_or(Error::MissingBipartition)?;
    check_supported(da, db)?;
    let threshold = match da * db {
        4 => T::of(1.0 / 3.0),
        _ => T::of(0.2),
    };
    Ok(rho.purity() > threshold)
}

/// Closed form for `Tr[rho_d^2]` of the diagonal two-qubit state:
/// `cos^4 t3 + (cos^4 t2 + (3 + cos 4t1)/4 sin^4 t2) sin^4 t3`.
pub fn tr_rhod_sq_su4<T: Scalar>(theta: &[T]) -> Result<T> {
    if theta.len() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            got: theta.len(),
        });
    }
    let (t1, t2, t3) = (theta[0], theta[1], theta[2]);
    let quarter = T::of(0.25);
    let three = T::of(3.0);
    let four = T::of(4.0);
    Ok(t3.cos().powi(4)
        + (t2.cos().powi(4) + quarter * (three + (four * t1).cos()) * t2.sin().powi(4))
            * t3.sin().powi(4))
}

/// Closed form for `Tr[rho_d^2]` of the diagonal qubit/qutrit state as a
/// polynomial in `sin^2(theta_i)`.
pub fn tr_rhod_sq_su6<T: Scalar>(theta: &[T]) -> Result<T> {
    if theta.len() != 5 {
        return Err(Error::WrongArity {
            expected: 5,
            got: theta.len(),
        });
    }
    let s: Vec<T> = theta.iter().map(|t| t.sin() * t.sin()).collect();
    let (s1, s2, s3, s4, s5) = (s[0], s[1], s[2], s[3], s[4]);
    let inner = T::one() - s5 + s4 * s5 - s4 * s4 * s5 + s3 * s4 * s4 * s5 - s3 * s3 * s4 * s4 * s5
        + s2 * s3 * s3 * s4 * s4 * s5
        - s2 * s2 * s3 * s3 * s4 * s4 * s5
        + s1 * s2 * s2 * s3 * s3 * s4 * s4 * s5
        - s1 * s1 * s2 * s2 * s3 * s3 * s4 * s4 * s5;
    Ok(T::one() - T::of(2.0) * s5 * inner)
}

// ---------------------------------------------------------------------------
// Mixed-state feasibility region
// ---------------------------------------------------------------------------

/// Critical value of `sin(theta_1)` where the purity boundary
/// `Tr[rho_d^2] = 1/3` crosses `sin(theta_2) = 79/100` with the boundary
/// tangent to the full `sin(theta_3)` range: `sqrt(1/2 + sqrt(32789757)/12482)`.
pub fn region_s1_upper<T: Scalar>() -> T {
    (T::of(0.5) + T::of(32789757.0).sqrt() / T::of(12482.0)).sqrt()
}

/// Critical value of `sin(theta_1)` where the same crossing occurs with the
/// `sin(theta_3) > sqrt(3)/2` cutoff:
/// `sqrt(1/2 + sqrt(785323439/3)/37446)`.
pub fn region_s1_lower<T: Scalar>() -> T {
    (T::of(0.5) + (T::of(785323439.0) / T::of(3.0)).sqrt() / T::of(37446.0)).sqrt()
}

/// Lower bound on `sin(theta_2)` above which purity exceeds 1/3 for every
/// `sin(theta_3)` (used on the `sin(theta_1) = region_s1_upper` slice).
pub fn region_s2_bound_strict<T: Scalar>(x: T) -> T {
    let x2 = x * x;
    let x4 = x2 * x2;
    let rad = (x2 - x4).max(T::zero()).sqrt();
    ((T::one() + rad) / (T::of(2.0) * (T::one() - x2 + x4))).sqrt()
}

/// Lower bound on `sin(theta_2)` above which purity exceeds 1/3 whenever
/// `sin(theta_3) > sqrt(3)/2`.
pub fn region_s2_bound_weak<T: Scalar>(x: T) -> T {
    let x2 = x * x;
    let x4 = x2 * x2;
    let t28 = T::of(28.0);
    let rad = (-T::one() + t28 * x2 - t28 * x4).max(T::zero()).sqrt();
    ((T::of(9.0) + T::of(3.0).sqrt() * rad) / (T::of(18.0) * (T::one() - x2 + x4))).sqrt()
}

/// Lower bound on `sin(theta_3)` above which purity exceeds 1/3 at the given
/// `(sin(theta_1), sin(theta_2))`.
pub fn region_s3_bound<T: Scalar>(x: T, y: T) -> T {
    let x2 = x * x;
    let x4 = x2 * x2;
    let y2 = y * y;
    let y4 = y2 * y2;
    let four = T::of(4.0);
    let rad = (-T::one() + four * y2 - four * y4 + four * x2 * y4 - four * x4 * y4)
        .max(T::zero())
        .sqrt();
    let denom = T::one() - y2 + y4 - x2 * y4 + x4 * y4;
    ((T::of(3.0) + T::of(3.0).sqrt() * rad) / (T::of(6.0) * denom)).sqrt()
}

/// First of the six sufficient branches (in display order) containing the
/// point, as a predicate over `(sin t1, sin t2, sin t3)`.
///
/// All inequalities are strict except the upper `sin(theta_2)` bound of
/// branch 3; membership in any branch implies `Tr[rho_d^2] > 1/3`.  The
/// branches are sufficient, not necessary: points outside every branch (the
/// pure-state corner included) return `None`.
pub fn su4_mixed_region_sin<T: Scalar>(s: [T; 3]) -> Option<u8> {
    let (x, y, z) = (s[0], s[1], s[2]);
    let one = T::one();
    let upper = region_s1_upper::<T>();
    let lower = region_s1_lower::<T>();
    let z_min = T::of(3.0).sqrt() / T::of(2.0);
    let y_min = T::of(0.79);
    let inv_sqrt2 = T::one() / T::of(2.0).sqrt();

    if x == upper && y > region_s2_bound_strict(x) && y < one && z > z_min && z < one {
        return Some(1);
    }
    if x == lower && y > region_s2_bound_weak(x) && y < one && z > z_min && z < one {
        return Some(2);
    }
    if x > inv_sqrt2
        && x < lower
        && y > y_min
        && y <= region_s2_bound_weak(x)
        && z > region_s3_bound(x, y)
        && z < one
    {
        return Some(3);
    }
    if x > upper && x < one && y > y_min && y < one && z > z_min && z < one {
        return Some(4);
    }
    if x > lower && x < upper && y > y_min && y < one && z > z_min && z < one {
        return Some(5);
    }
    if x > inv_sqrt2 && x < lower && y > region_s2_bound_weak(x) && y < one && z > z_min && z < one
    {
        return Some(6);
    }
    None
}

/// Branch classification of a point given by angles in `[0, pi/2]`.
pub fn su4_mixed_region<T: Scalar>(theta: &[T]) -> Result<Option<u8>> {
    if theta.len() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            got: theta.len(),
        });
    }
    let half_pi = T::FRAC_PI_2();
    for t in theta {
        if *t < T::zero() || *t > half_pi {
            return Err(Error::InvalidParameter(format!(
                "theta {t} outside [0, pi/2]"
            )));
        }
    }
    Ok(su4_mixed_region_sin([
        theta[0].sin(),
        theta[1].sin(),
        theta[2].sin(),
    ]))
}

/// One row of a region scan.
#[derive(Clone, Debug)]
pub struct RegionSample<T> {
    pub theta: [T; 3],
    pub branch: Option<u8>,
    pub tr_rho_d_sq: T,
}

/// Scans uniform `theta in [0, pi/2]^3` samples, classifying each point and
/// evaluating the purity closed form.  Deterministic for a fixed seed
/// regardless of thread count.
pub fn region_scan<T: Scalar>(samples: u64, seed: u64) -> Vec<RegionSample<T>> {
    const BATCH: u64 = 4096;
    let batches = samples.div_ceil(BATCH);
    (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b + 1);
            let count = BATCH.min(samples - b * BATCH);
            let mut rows = Vec::with_capacity(count as usize);
            for _ in 0..count {
                let mut theta = [T::zero(); 3];
                for t in theta.iter_mut() {
                    *t = T::of(rng.gen::<f64>()) * T::FRAC_PI_2();
                }
                let branch = su4_mixed_region_sin([theta[0].sin(), theta[1].sin(), theta[2].sin()]);
                let tr = tr_rhod_sq_su4(&theta).expect("arity");
                rows.push(RegionSample {
                    theta,
                    branch,
                    tr_rho_d_sq: tr,
                });
            }
            rows
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

// ---------------------------------------------------------------------------
// Closed-form partial-transpose eigenvalues and determinant
// ---------------------------------------------------------------------------

/// Verbatim evaluation of the displayed eigenvalue formulas for the partial
/// transpose of the general entangled pure state, together with a numeric
/// check against the actual spectrum.
#[derive(Clone, Debug)]
pub struct PtEigenFormula<T> {
    pub psi_plus: Complex<T>,
    pub psi_minus: Complex<T>,
    pub phi_plus: Complex<T>,
    pub phi_minus: Complex<T>,
    /// Numerically computed spectrum of `rho^pt`, ascending.
    pub spectrum: Vec<T>,
    /// The `psi` pair reproduces two spectrum values.
    pub psi_matches: bool,
    /// The `phi` pair reproduces the remaining two spectrum values.
    pub phi_matches: bool,
    /// Both pairs match, i.e. the formulas account for the whole spectrum.
    pub matches_spectrum: bool,
}

fn formula_pair_matches<T: Scalar>(pair: [Complex<T>; 2], pool: &mut Vec<T>, tol: T) -> bool {
    for value in pair {
        if value.im.abs() > tol {
            return false;
        }
        let Some(pos) = pool.iter().position(|x| (*x - value.re).abs() <= tol) else {
            return false;
        };
        pool.remove(pos);
    }
    true
}

/// Evaluates the displayed `Psi`/`Phi` eigenvalue formulas at the given
/// angles and compares them with the computed `rho^pt` spectrum.
///
/// The `Phi` expression is evaluated exactly as displayed (with `cos(a6)`
/// unsquared inside the radical and `Delta` as an outer factor); whether it
/// matches is reported through the flags rather than silently corrected.
/// The phase `alpha_3` does not enter, mirroring its absence from the
/// spectrum.
pub fn pt_eigen_formula_su4<T: Scalar>(
    alpha1: T,
    alpha2: T,
    alpha4: T,
    alpha5: T,
    alpha6: T,
) -> PtEigenFormula<T> {
    let one = Complex::new(T::one(), T::zero());
    let half = Complex::new(T::of(0.5), T::zero());
    let (c2, s2) = (alpha2.cos(), alpha2.sin());
    let (c4, s4) = (alpha4.cos(), alpha4.sin());
    let (c6, s6) = (alpha6.cos(), alpha6.sin());
    let phase_a5 = Complex::from_polar(T::one(), alpha5);
    let phase_2a1 = Complex::from_polar(T::one(), alpha1 + alpha1);
    let x = Complex::new(c6 * s2 * s4, T::zero());
    let y = Complex::new(c2 * s6, T::zero());
    let delta = (phase_a5 * x + phase_2a1 * y).sqrt() * (phase_2a1 * x + phase_a5 * y).sqrt();

    let cum = alpha1 + alpha1 + alpha5;
    let half_phase = Complex::from_polar(T::one(), -cum / T::of(2.0));
    let psi = half_phase * Complex::new(c4 * c6, T::zero()) * delta;
    let psi_plus = psi;
    let psi_minus = -psi;

    let radical = (Complex::from_polar(T::one(), cum)
        - Complex::new(T::of(4.0) * c4 * c4 * c6, T::zero()))
    .sqrt();
    let phi_term = half * half_phase * radical * delta;
    let phi_plus = half * one + phi_term;
    let phi_minus = half * one - phi_term;

    // Numeric spectrum of the partial transpose at the same point.
    let mut alpha = [T::zero(); 15];
    alpha[0] = alpha1;
    alpha[1] = alpha2;
    alpha[3] = alpha4;
    alpha[4] = alpha5;
    alpha[5] = alpha6;
    let spectrum = su4_pt_spectrum(&alpha);

    let tol = T::of(1e-9);
    let mut pool = spectrum.clone();
    let psi_matches = formula_pair_matches([psi_plus, psi_minus], &mut pool, tol);
    let phi_matches = psi_matches && formula_pair_matches([phi_plus, phi_minus], &mut pool, tol);
    PtEigenFormula {
        psi_plus,
        psi_minus,
        phi_plus,
        phi_minus,
        spectrum,
        psi_matches,
        phi_matches,
        matches_spectrum: psi_matches && phi_matches,
    }
}

/// Spectrum of the partial transpose of `U rho_d U^dagger` for the pure
/// state `rho_d = diag(1, 0, 0, 0)` and the 15-angle factorization.
pub fn su4_pt_spectrum<T: Scalar>(alpha: &[T; 15]) -> Vec<T> {
    let basis = crate::algebra::GellMannBasis::new(4).expect("dimension 4");
    let u = crate::euler::compose_unitary(&su4_euler(alpha).expect("arity 15"), &basis)
        .expect("valid factorization");
    let rho_d = rho_d_su4(&[T::FRAC_PI_2(); 3]).expect("arity 3");
    let rho = conjugate(&u, &rho_d).expect("dimensions agree");
    let pt = partial_transpose(&rho, Subsystem::B).expect("bipartition set");
    pt.hermitian_eigenvalues()
}

/// Determinant of `U rho_d U^dagger` partial-transposed, for the same state.
pub fn su4_pt_det<T: Scalar>(alpha: &[T; 15]) -> T {
    let basis = crate::algebra::GellMannBasis::new(4).expect("dimension 4");
    let u = crate::euler::compose_unitary(&su4_euler(alpha).expect("arity 15"), &basis)
        .expect("valid factorization");
    let rho_d = rho_d_su4(&[T::FRAC_PI_2(); 3]).expect("arity 3");
    let rho = conjugate(&u, &rho_d).expect("dimensions agree");
    let pt = partial_transpose(&rho, Subsystem::B).expect("bipartition set");
    pt.det().re
}

/// Nine-term expansion of the constant term of the characteristic polynomial
/// of `rho^pt` in terms of the rotations and the cumulative phase
/// `eta = 2 alpha_1 - alpha_5`.  Equals `det(rho^pt)` directly, with no
/// extra phase prefactor.
pub fn epsilon0<T: Scalar>(alpha2: T, alpha4: T, alpha6: T, eta: T) -> Complex<T> {
    let (c2, s2) = (alpha2.cos(), alpha2.sin());
    let (c4, _s4) = (alpha4.cos(), alpha4.sin());
    let s4 = alpha4.sin();
    let (c6, s6) = (alpha6.cos(), alpha6.sin());
    let e_m = Complex::from_polar(T::one(), -eta);
    let e_p = Complex::from_polar(T::one(), eta);
    let e2_m = Complex::from_polar(T::one(), -(eta + eta));
    let e2_p = Complex::from_polar(T::one(), eta + eta);
    let re = |x: T| Complex::new(x, T::zero());
    let two = T::of(2.0);
    let four = T::of(4.0);
    let c4p4 = c4.powi(4);

    let mut acc = Complex::new(T::zero(), T::zero());
    acc = acc - re(c4p4 * c6.powi(8) * s2.powi(4) * s4.powi(4));
    let t2 = c2 * c4p4 * c6.powi(7) * s2.powi(3) * s4.powi(3) * s6;
    acc = acc - e_m * re(two * t2);
    acc = acc - e_p * re(two * t2);
    let t4 = c2 * c2 * c4p4 * c6.powi(6) * s2 * s2 * s4 * s4 * s6 * s6;
    acc = acc - re(four * t4);
    acc = acc - e2_m * re(t4);
    acc = acc - e2_p * re(t4);
    let t7 = c2.powi(3) * c4p4 * c6.powi(5) * s2 * s4 * s6.powi(3);
    acc = acc - e_m * re(two * t7);
    acc = acc - e_p * re(two * t7);
    acc = acc - re(c2.powi(4) * c4p4 * c6.powi(4) * s6.powi(4));
    acc
}

// ---------------------------------------------------------------------------
// Bell phase classification
// ---------------------------------------------------------------------------

/// The two cumulative-phase families of the entangling operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseFamily {
    /// `beta = alpha_1 + alpha_3 + alpha_5` with the corner-pattern states;
    /// reaches Bell states 1 and 2.
    BellOneTwo,
    /// `gamma = alpha_1 - alpha_3` with the central-block states; reaches
    /// Bell states 3 and 4.
    BellThreeFour,
}

/// Outcome of classifying a cumulative phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BellPhaseClass {
    /// The Bell state reached, when the phase sits on a lattice point.
    pub bell_index: Option<u8>,
    /// True for phases strictly between lattice points ("intermediate" Bell
    /// states: same modulus pattern, not a convex mixture of Bell states).
    pub intermediate: bool,
}

/// Classifies a cumulative phase.  Family one accepts
/// `beta in [0, 5 pi]`: odd multiples of pi give Bell 1, even give Bell 2.
/// Family two accepts `gamma in [-2 pi, 2 pi]`: `|gamma| = pi` gives Bell 4,
/// `|gamma| in {0, 2 pi}` gives Bell 3.  Lattice membership is tested with
/// tolerance 1e-9.
pub fn bell_phase_classify<T: Scalar>(family: PhaseFamily, phase: T) -> Result<BellPhaseClass> {
    let pi = T::PI();
    let tol = T::of(1e-9);
    let near = |value: T, target: T| (value - target).abs() <= tol;
    let classify = |value: T, odd_index: u8, even_index: u8, max_k: usize| {
        for k in 0..=max_k {
            let target = pi * T::of_usize(k);
            if near(value, target) {
                let index = if k % 2 == 1 { odd_index } else { even_index };
                return BellPhaseClass {
                    bell_index: Some(index),
                    intermediate: false,
                };
            }
        }
        BellPhaseClass {
            bell_index: None,
            intermediate: true,
        }
    };
    match family {
        PhaseFamily::BellOneTwo => {
            let hi = pi * T::of(5.0);
            if phase < -tol || phase > hi + tol {
                return Err(Error::PhaseOutOfRange {
                    phase: phase.to_f64().unwrap_or(f64::NAN),
                    lo: 0.0,
                    hi: 5.0 * std::f64::consts::PI,
                });
            }
            Ok(classify(phase, 1, 2, 5))
        }
        PhaseFamily::BellThreeFour => {
            let hi = pi * T::of(2.0);
            if phase.abs() > hi + tol {
                return Err(Error::PhaseOutOfRange {
                    phase: phase.to_f64().unwrap_or(f64::NAN),
                    lo: -2.0 * std::f64::consts::PI,
                    hi: 2.0 * std::f64::consts::PI,
                });
            }
            Ok(classify(phase.abs(), 4, 3, 2))
        }
    }
}
