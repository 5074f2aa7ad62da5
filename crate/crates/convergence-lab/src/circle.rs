use fuzzy_circle::{build_circle, CircleModel};
use linalg_core::{operator_norm, OperatorMatrix, C64};
use rayon::prelude::*;

use crate::{
    check_lambdas, check_normalized, prop_circle_k, DecayRow, DecayTable, KSchedule, LabError, NormRow, NormTable,
    ProductRow, ProductTable, Result, TruncatedFourier,
};

/// `f̂_Λ = Σ_{|h|<=2Λ} f_h η^h` with `η^± = √2 ξ^±`; higher coefficients are dropped.
pub fn fhat_circle(f: &TruncatedFourier, model: &CircleModel) -> OperatorMatrix {
    let n = model.dim();
    let eta_plus = model.xi_plus.scale_real(std::f64::consts::SQRT_2);
    let eta_minus = model.xi_minus.scale_real(std::f64::consts::SQRT_2);
    let top = (2 * model.lambda).min(f.degree()) as i64;
    let mut out = OperatorMatrix::identity(n).scale(f.get(0));
    let (mut up, mut down) = (OperatorMatrix::identity(n), OperatorMatrix::identity(n));
    for h in 1..=top {
        up = &up * &eta_plus;
        down = &down * &eta_minus;
        out += &up.scale(f.get(h));
        out += &down.scale(f.get(-h));
    }
    out
}

fn build(schedule: &KSchedule, lambda: usize) -> Result<CircleModel> {
    let k = schedule.k(lambda);
    if !(k > 0.0 && k.is_finite()) {
        return Err(LabError::BadSchedule { lambda, k });
    }
    Ok(build_circle(lambda, k)?)
}

/// `φ_Λ` as a vector on `ℋ_Λ`.
fn band_vector(phi: &TruncatedFourier, model: &CircleModel) -> Vec<C64> {
    model.ms().map(|m| phi.get(m)).collect()
}

/// `‖target − v‖` where `v ∈ ℋ_Λ` and `target` has arbitrary support.
fn distance(target: &TruncatedFourier, v: &[C64], model: &CircleModel) -> f64 {
    let inside: f64 = model.ms().map(|m| (target.get(m) - v[model.index(m)]).norm_sqr()).sum();
    (inside + target.tail_norm_sqr(model.lambda)).sqrt()
}

/// `‖(f· − f̂_Λ)φ‖`, computed in coefficient space.
pub fn circle_error(f: &TruncatedFourier, phi: &TruncatedFourier, model: &CircleModel) -> f64 {
    let v = fhat_circle(f, model).apply(&band_vector(phi, model));
    distance(&f.mul(phi), &v, model)
}

/// Square root of `Σ_{|n|>Λ}|(fφ)_n|² + 2‖f‖_∞²‖φ−φ_Λ‖² + 2F²Φ²/(2Λ+1)`,
/// valid for `k >= 2Λ(Λ+1)(2Λ+1)²`.
pub fn flimit_bound(f: &TruncatedFourier, phi: &TruncatedFourier, lambda: usize) -> f64 {
    let sup = f.sup_norm_bound();
    let (ff, pp) = (f.max_abs(), phi.max_abs());
    let sq = f.mul(phi).tail_norm_sqr(lambda)
        + 2.0 * sup * sup * phi.tail_norm_sqr(lambda)
        + 2.0 * ff * ff * pp * pp / (2 * lambda + 1) as f64;
    sq.sqrt()
}

pub fn strong_convergence_circle(
    f: &TruncatedFourier,
    phi: &TruncatedFourier,
    schedule: &KSchedule,
    lambdas: &[usize],
) -> Result<DecayTable> {
    check_lambdas(lambdas)?;
    check_normalized(phi.norm())?;
    let rows = lambdas
        .par_iter()
        .map(|&lambda| {
            let model = build(schedule, lambda)?;
            Ok(DecayRow {
                lambda,
                k: model.k,
                error: circle_error(f, phi, &model),
                bound: flimit_bound(f, phi, lambda),
                below_schedule: model.k < prop_circle_k(lambda),
                dropped_terms: f.degree() > 2 * lambda,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecayTable { label: "circle ‖(f − f̂_Λ)φ‖".into(), schedule: schedule.name(), rows })
}

/// Product limit `f̂_Λ ĝ_Λ φ → (fg)φ` and commutator decay `[f̂_Λ, ĝ_Λ]φ → 0`.
pub fn product_convergence_circle(
    f: &TruncatedFourier,
    g: &TruncatedFourier,
    phi: &TruncatedFourier,
    schedule: &KSchedule,
    lambdas: &[usize],
) -> Result<ProductTable> {
    check_lambdas(lambdas)?;
    check_normalized(phi.norm())?;
    let target = f.mul(g).mul(phi);
    let rows = lambdas
        .par_iter()
        .map(|&lambda| {
            let model = build(schedule, lambda)?;
            let (fh, gh) = (fhat_circle(f, &model), fhat_circle(g, &model));
            let v = band_vector(phi, &model);
            let fg = fh.apply(&gh.apply(&v));
            let gf = gh.apply(&fh.apply(&v));
            let comm = fg.iter().zip(&gf).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt();
            Ok(ProductRow { lambda, k: model.k, product_error: distance(&target, &fg, &model), commutator: comm })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProductTable { label: "circle f̂_Λ ĝ_Λ vs (fg)".into(), schedule: schedule.name(), rows })
}

/// `‖f̂_Λ‖_op` per Λ against `3‖f‖_∞`, using the rigorous upper bound on `‖f‖_∞`.
pub fn uniform_norm_bound_circle(f: &TruncatedFourier, schedule: &KSchedule, lambdas: &[usize]) -> Result<NormTable> {
    check_lambdas(lambdas)?;
    let bound = 3.0 * f.sup_norm_bound();
    let rows = lambdas
        .par_iter()
        .map(|&lambda| {
            let model = build(schedule, lambda)?;
            Ok(NormRow {
                lambda,
                k: model.k,
                norm: operator_norm(&fhat_circle(f, &model)),
                bound,
                below_schedule: model.k < prop_circle_k(lambda),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NormTable { label: "circle ‖f̂_Λ‖_op".into(), schedule: schedule.name(), rows })
}
