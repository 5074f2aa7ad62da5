use linalg_core::{commutator, lagrange_projector, word_span_dimension, Check, CheckSet, OperatorMatrix};

use crate::{default_k_schedule, CircleModel};

/// Residuals of the fuzzy-circle commutation relations, each against
/// `1e-13 * dim`.
pub fn verify_prop21(model: &CircleModel) -> CheckSet {
    let n = model.dim();
    let tol = 1e-13 * n as f64;
    let id = OperatorMatrix::identity(n);
    let mut out = CheckSet::default();

    out.push(Check::new("adjoint", "comrelD=2", model.xi_minus.max_diff(&model.xi_plus.adjoint()), 0.0));

    let top = 2 * model.lambda as u32 + 1;
    let nil = model.xi_plus.pow(top).max_abs().max(model.xi_minus.pow(top).max_abs());
    out.push(Check::new("nilpotency", "comrelD=2", nil, tol));

    let mut minpoly = id.clone();
    for m in model.ms() {
        minpoly = &minpoly * &(&model.l_bar - &id.scale_real(m as f64));
    }
    out.push(Check::new("minimal polynomial of L", "comrelD=2", minpoly.max_abs(), tol));

    let lp = commutator(&model.l_bar, &model.xi_plus).unwrap().max_diff(&model.xi_plus);
    let lm = commutator(&model.l_bar, &model.xi_minus).unwrap().max_diff(&(-&model.xi_minus));
    out.push(Check::new("[L, xi^pm] = pm xi^pm", "comrelD=2", lp.max(lm), tol));

    let lam = model.lambda as i64;
    let edge_diff = &model.projector(lam) - &model.projector(-lam);
    let edge_sum = &model.projector(lam) + &model.projector(-lam);
    let mu = model.mu();
    let comm = commutator(&model.xi_plus, &model.xi_minus).unwrap();
    let expected = &model.l_bar.scale_real(-1.0 / model.k) + &edge_diff.scale_real(mu / 2.0);
    out.push(Check::new("[xi+, xi-]", "comrelD=2", comm.max_diff(&expected), tol));

    let l2 = &model.l_bar * &model.l_bar;
    let r2_expected = &(&id + &l2.scale_real(1.0 / model.k)) - &edge_sum.scale_real(mu / 2.0);
    out.push(Check::new("R^2", "R^2D=2", model.r2.max_diff(&r2_expected), tol));

    if model.k == default_k_schedule(model.lambda) {
        let lf = model.lambda as f64;
        let verbatim = &model.l_bar.scale_real(-1.0 / (lf * lf * (lf + 1.0) * (lf + 1.0)))
            + &edge_diff.scale_real((1.0 + 1.0 / (lf * (lf + 1.0))) / 2.0);
        out.push(Check::new("[xi+, xi-] at k = Λ²(Λ+1)²", "comrelD=2'", comm.max_diff(&verbatim), tol));
    }

    let spectrum: Vec<f64> = model.ms().map(|m| m as f64).collect();
    let mut proj = 0.0f64;
    for m in model.ms() {
        let p = lagrange_projector(&model.l_bar, &spectrum, m as f64);
        proj = proj.max(p.max_diff(&model.projector(m)));
    }
    out.push(Check::new("projectors as polynomials in L", "comrelD=2", proj, tol));

    out.push(Check::new("H = L^2", "Em", model.h_bar.max_diff(&l2), 0.0));
    out
}

/// Dimension of the span of all words of length `<= max_len` in ξ^±,
/// including the empty word.
pub fn generated_dimension(model: &CircleModel, max_len: usize) -> usize {
    word_span_dimension(&[&model.xi_plus, &model.xi_minus], max_len, 1e-8)
}
