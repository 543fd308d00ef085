//! Gell-Mann bases for su(N), coherence-vector density matrices, Euler-angle
//! factorizations of SU(4) and SU(6), partial-transpose entanglement tests
//! for two-qubit and qubit/qutrit systems, and Fubini-Study volume
//! integration over complex projective charts.
//!
//! The core math is generic over the real scalar type through [`Scalar`]
//! (`f32` or `f64`); the aliases at the crate root fix `f64`, which is what
//! the command-line tool and the verification suite use.
//!
//! Generator indices follow the conventional 1-based numbering
//! (lambda_1 ... lambda_{N^2-1}) everywhere in the public API.

pub mod algebra;
pub mod bloch;
pub mod entangle;
pub mod error;
pub mod euler;
pub mod linalg;
pub mod sampling;
pub mod scalar;
pub mod volume;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// The two unitary groups (and bipartitions) this crate specializes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    /// SU(4), two-qubit system (2 x 2).
    Su4,
    /// SU(6), qubit/qutrit system (2 x 3).
    Su6,
}

impl Group {
    pub fn dimension(self) -> usize {
        match self {
            Group::Su4 => 4,
            Group::Su6 => 6,
        }
    }

    pub fn bipartition(self) -> (usize, usize) {
        match self {
            Group::Su4 => (2, 2),
            Group::Su6 => (2, 3),
        }
    }
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Group::Su4 => write!(f, "su4"),
            Group::Su6 => write!(f, "su6"),
        }
    }
}

/// Default scalar used by the CLI and the concrete aliases.
pub type Real = f64;
/// Complex number over the default scalar.
pub type C64 = num_complex::Complex<f64>;
/// Dense complex matrix over the default scalar.
pub type CMatrix64 = linalg::CMatrix<f64>;
/// Gell-Mann basis over the default scalar.
pub type GellMannBasis64 = algebra::GellMannBasis<f64>;
/// Density matrix over the default scalar.
pub type DensityMatrix64 = bloch::DensityMatrix<f64>;
