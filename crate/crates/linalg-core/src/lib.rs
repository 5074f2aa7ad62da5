//! Dense complex linear algebra for small operator algebras.
//!
//! Everything here works on [`OperatorMatrix`], a square row-major matrix of
//! `Complex64`. Dimensions in this workspace stay below a few hundred, so the
//! algorithms favour accuracy and determinism over asymptotic speed.

mod check;
mod eig;
mod matrix;
mod norm;
mod poly;

pub use check::{Check, CheckSet};
pub use eig::{hermitian_eig, SpectralDecomposition};
pub use matrix::{anticommutator, commutator, fmt17, matmul, OperatorMatrix};
pub use norm::{operator_norm, operator_norm_estimate, NormEstimate};
pub use num_complex::Complex64;
pub use poly::{gram_rank, lagrange_projector, matrix_polynomial, word_span_dimension};

/// Shorthand for the complex scalar used throughout.
pub type C64 = Complex64;

/// Imaginary unit.
pub const I: C64 = C64::new(0.0, 1.0);

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not Hermitian (max asymmetry {0:e})")]
    NotHermitian(f64),
    #[error("expected {expected} entries, got {got}")]
    BadLength { expected: usize, got: usize },
}
