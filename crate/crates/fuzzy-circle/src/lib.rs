//! The fuzzy circle on the `(2Λ+1)`-dimensional space spanned by `ψ_m`,
//! `-Λ <= m <= Λ`, stored at row `m + Λ`.

mod derivatives;
mod model;
mod o2;
mod prop21;
mod so3;

pub use derivatives::{derivative_coefficient, derivative_offset, projected_derivatives, ProjectedDerivatives};
pub use model::{build_circle, default_k_schedule, CircleError, CircleModel};
pub use o2::{o2_transform, O2Kind, O2Transformed};
pub use prop21::{generated_dimension, verify_prop21};
pub use so3::{build_so3_realization, So3Realization};
