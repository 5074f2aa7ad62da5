//! Strong convergence of fuzzy multiplication operators `f̂_Λ` to `f·`.
//!
//! Functions are given by their coefficients: Fourier coefficients on the
//! circle ([`TruncatedFourier`]) and spherical-harmonic coefficients on the
//! sphere ([`TruncatedSphFn`]). Errors are computed exactly in coefficient
//! space; the operators only ever see the projection onto `ℋ_Λ`.

mod circle;
mod corpus;
mod fourier;
mod schedule;
mod sphere;
mod sphfn;
mod table;
mod witness;

pub use circle::{
    circle_error, fhat_circle, flimit_bound, product_convergence_circle, strong_convergence_circle,
    uniform_norm_bound_circle,
};
pub use corpus::{circle_f_corpus, circle_phi_corpus, sphere_f_corpus, sphere_phi_corpus};
pub use fourier::TruncatedFourier;
pub use schedule::{prop_circle_k, prop_sphere_k, KSchedule};
pub use sphere::{
    fhat_sphere, flimit3d_bound, product_convergence_sphere, sphere_error, sphere_product, strong_convergence_sphere,
};
pub use sphfn::{check_grid, product_grid, TruncatedSphFn, YlmTable};
pub use table::{DecayRow, DecayTable, NormRow, NormTable, ProductRow, ProductTable};
pub use witness::{
    nonconvergence_witness_circle, nonconvergence_witness_sphere, printed_zero_witness, SphereWitness, Witness,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LabError {
    #[error("expected {expected} coefficients, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("function has zero norm")]
    ZeroFunction,
    #[error("φ must be normalized, got norm {0}")]
    NotNormalized(f64),
    #[error("Λ list is empty or contains 0")]
    BadLambdaList,
    #[error("schedule gave k = {k} at Λ = {lambda}")]
    BadSchedule { lambda: usize, k: f64 },
    #[error("grid {have_theta}×{have_phi} cannot integrate degree {degree} products (need {need_theta}×{need_phi})")]
    GridTooCoarse { degree: usize, have_theta: usize, have_phi: usize, need_theta: usize, need_phi: usize },
    #[error("unknown schedule {0:?}")]
    UnknownSchedule(String),
    #[error(transparent)]
    Circle(#[from] fuzzy_circle::CircleError),
    #[error(transparent)]
    Sphere(#[from] fuzzy_sphere::SphereError),
}

pub type Result<T> = std::result::Result<T, LabError>;

pub(crate) fn check_lambdas(lambdas: &[usize]) -> Result<()> {
    if lambdas.is_empty() || lambdas.contains(&0) {
        return Err(LabError::BadLambdaList);
    }
    Ok(())
}

pub(crate) fn check_normalized(norm: f64) -> Result<()> {
    if (norm - 1.0).abs() > 1e-12 {
        return Err(LabError::NotNormalized(norm));
    }
    Ok(())
}
