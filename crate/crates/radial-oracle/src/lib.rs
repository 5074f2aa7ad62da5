//! Independent numerics for the radial parts of the fuzzy circle and sphere.
//!
//! Matrix elements between the Gaussian radial profiles are computed exactly
//! from closed-form Gaussian moments and compared with their large-k series.
//! Energies come from a bracketed root solve (D=2) and from a
//! finite-difference Schrödinger operator (D=2 and D=3).

mod circle;
mod energy;
mod fd;
mod fit;
mod gaussian;
mod quad;
mod sphere;
mod sweep;
mod tail;

pub use circle::{
    circle_matrix_element, dplus_element, flemma_params, flemma_series, radial_derivative_expectation, xplus_element,
    CircleState, FlemmaParams, MatrixElement, Pair,
};
pub use energy::{eneq_residual, solve_em, solve_v0, v0_residual, EnergySolveResult};
pub use fd::{fd_spectrum, RadialGrid};
pub use fit::loglog_slope;
pub use gaussian::{gaussian_moment, ExpPoly, GaussianProfile};
pub use quad::integrate;
pub use sphere::{
    c_l, printed_j, printed_m, sphere_deriv_integral, sphere_radial_integral, DerivIntegral, RadialWeight,
    SphereState,
};
pub use sweep::{run_sweep, SlopeFit, SweepReport, SweepRow, DEFAULT_K_SWEEP};
pub use tail::{tail_shift_bound, TailShift};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("Gaussian width must be positive, got a = {0}")]
    NonPositiveWidth(f64),
    #[error("no root of the energy equation in the bracket for k = {k}, m = {m}, n = {n}")]
    NoRoot { k: f64, m: i64, n: u32 },
    #[error("k = {0} is outside the range where the radial profiles exist")]
    BadK(f64),
    #[error("grid has {have} points per oscillator length, need at least {need}")]
    UnderResolved { have: f64, need: f64 },
    #[error("grid does not cover the well: {0}")]
    BadGrid(String),
    #[error("|l - L| must be 0 or 1, got l = {l}, L = {big_l}")]
    BadPair { l: u32, big_l: u32 },
    #[error("dimension must be 2 or 3, got {0}")]
    BadDimension(u32),
}
