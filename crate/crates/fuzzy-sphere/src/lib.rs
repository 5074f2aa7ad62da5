//! The fuzzy sphere on the `(Λ+1)²`-dimensional space spanned by `ψ_l^m`,
//! `0 <= l <= Λ`, `|m| <= l`, stored at row `l² + l + m`.
//!
//! Spherical components are indexed by `a + 1` for `a ∈ {-1, 0, 1}`;
//! Cartesian components by `i - 1` for `i ∈ {1, 2, 3}`.

mod fuzzy_harmonics;
mod gamma;
mod model;
mod o3;
mod prop31;
mod so4;

pub use fuzzy_harmonics::{build_fuzzy_harmonics, harmonic_top_norm, FuzzyHarmonicSet};
pub use gamma::ln_gamma;
pub use model::{build_sphere, cartesian, default_k_schedule, flat_index, SphereError, SphereModel};
pub use o3::{o3_transform, O3Kind, O3Transformed};
pub use prop31::{generated_dimension, verify_prop31};
pub use so4::{build_so4_realization, g_gamma_form, g_product_form, theta_ladders, So4Realization, ThetaLadders};
