//! Angular data on the unit sphere.
//!
//! Conventions: orthonormal spherical harmonics with the Condon–Shortley
//! phase, and spherical vector components
//! `t^0 = cos θ`, `t^± = sin θ e^{±iφ} / √2`.
//! Every sign in [`a_coef`]/[`b_coef`] follows from these two choices.

mod identities;
mod ladder;
mod quadrature;
mod ylm;

pub use identities::{verify_ladder_identities, IdentityReport};
pub use ladder::{a_coef, b_coef, gamma_coef, LadderTable};
pub use quadrature::{gauss_legendre, sphere_inner_product, SphereGrid};
pub use ylm::{eval_ylm, t_component};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HarmonicsError {
    #[error("|m| = {m} exceeds l = {l}")]
    BadOrder { l: i32, m: i32 },
    #[error("sample count {got} does not match grid size {expected}")]
    ShapeMismatch { expected: usize, got: usize },
}
