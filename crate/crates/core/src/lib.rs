//! Solvability criteria, invariant distances and extremal interpolants for
//! the analysable small cases of the μ-synthesis problem: the two-point 2×2
//! spectral Nevanlinna-Pick problem, the 2×2 spectral Carathéodory-Fejér
//! problem, the Schwarz lemma for the tetrablock and the μ-analogue of the
//! Carathéodory-Fejér problem for diagonal uncertainty.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod construct;
pub mod decide;
pub mod error;
pub mod gamma;
pub mod numerics;
pub mod tetra;
pub mod tol;
pub mod verify;

pub use construct::{BlaschkeProduct, Geodesic, MatrixInterpolant, Provenance, SnpConstruction};
pub use decide::{MuCfInstance, ScfInstance, SnpInstance, Status, TetraSchwarzInstance, Verdict};
pub use error::{Error, Result};
pub use gamma::{GammaPoint, GammaTangent};
pub use numerics::{Complex64, ComplexScalar, Mat2};
pub use tetra::{MuMethod, MuResult, TetraPoint};
pub use tol::Config;
pub use verify::VerificationReport;
