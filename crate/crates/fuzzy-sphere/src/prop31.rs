use linalg_core::{commutator, word_span_dimension, Check, CheckSet, OperatorMatrix, I};

use crate::{default_k_schedule, SphereModel};

/// Levi-Civita symbol on `0..3`.
pub(crate) fn epsilon(i: usize, j: usize, h: usize) -> f64 {
    match (i, j, h) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Largest residual of `[A_i, B_j] = i ε^{ijh} C_h`.
pub(crate) fn so3_bracket_residual(a: &[OperatorMatrix; 3], b: &[OperatorMatrix; 3], c: &[OperatorMatrix; 3]) -> f64 {
    let n = a[0].dim();
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let lhs = commutator(&a[i], &b[j]).unwrap();
            let mut rhs = OperatorMatrix::zeros(n);
            for (h, ch) in c.iter().enumerate() {
                let e = epsilon(i, j, h);
                if e != 0.0 {
                    rhs += &ch.scale(I * e);
                }
            }
            worst = worst.max(lhs.max_diff(&rhs));
        }
    }
    worst
}

/// Residuals of the fuzzy-sphere relations, each against `1e-13 * dim`.
pub fn verify_prop31(model: &SphereModel) -> CheckSet {
    let n = model.dim();
    let tol = 1e-13 * n as f64;
    let id = OperatorMatrix::identity(n);
    let big = model.lambda as i32;
    let mut out = CheckSet::default();

    // Polynomial residuals are relative to the product of the factor sizes.
    let mut casimir_poly = id.clone();
    let mut scale = 1.0;
    for l in 0..=big {
        let f = &model.l2 - &id.scale_real((l * (l + 1)) as f64);
        scale *= f.max_abs().max(1.0);
        casimir_poly = &casimir_poly * &f;
    }
    out.push(Check::new("prod (L^2 - l(l+1)) = 0", "rf3D3", casimir_poly.max_abs() / scale, tol));

    let mut per_l = 0.0f64;
    for l in 0..=big {
        let mut p = model.projector(l);
        let mut scale = 1.0;
        for m in -l..=l {
            let f = &model.l_cart[2] - &id.scale_real(m as f64);
            scale *= f.max_abs().max(1.0);
            p = &f * &p;
        }
        per_l = per_l.max(p.max_abs() / scale);
    }
    out.push(Check::new("prod (L3 - m) P_l = 0", "rf3D3", per_l, tol));

    let top = 2 * model.lambda as u32 + 1;
    let nil = model.xa(1).pow(top).max_abs().max(model.xa(-1).pow(top).max_abs());
    out.push(Check::new("(x^pm)^(2Λ+1) = 0", "rf3D3", nil, tol));

    let herm = (0..3)
        .map(|i| model.x_cart[i].hermitian_defect().max(model.l_cart[i].hermitian_defect()))
        .fold(0.0, f64::max);
    out.push(Check::new("x^i, L_i Hermitian", "rf3D4", herm, tol));
    out.push(Check::new("[L_i, x^j]", "rf3D4", so3_bracket_residual(&model.l_cart, &model.x_cart, &model.x_cart), tol));
    out.push(Check::new("[L_i, L_j]", "rf3D4", so3_bracket_residual(&model.l_cart, &model.l_cart, &model.l_cart), tol));

    let mut xl = OperatorMatrix::zeros(n);
    for i in 0..3 {
        xl += &(&model.x_cart[i] * &model.l_cart[i]);
    }
    out.push(Check::new("x^i L_i = 0", "xx", xl.max_abs(), tol));

    let p_top = model.projector(big);
    let factor = &id.scale_real(-1.0 / model.k) + &p_top.scale_real(model.k_const());
    let rhs = model.l_cart.clone().map(|lh| &factor * &lh);
    out.push(Check::new("[x^i, x^j]", "xx", so3_bracket_residual(&model.x_cart, &model.x_cart, &rhs), tol));

    if model.k == default_k_schedule(model.lambda) {
        let lf = model.lambda as f64;
        let q = lf * lf * (lf + 1.0) * (lf + 1.0);
        let kk = 1.0 / q + (1.0 + 1.0 / ((lf + 1.0) * (lf + 1.0))) / (2.0 * lf + 1.0);
        let factor = &id.scale_real(-1.0 / q) + &p_top.scale_real(kk);
        let rhs = model.l_cart.clone().map(|lh| &factor * &lh);
        out.push(Check::new(
            "[x^i, x^j] at k = Λ²(Λ+1)²",
            "rf3D1",
            so3_bracket_residual(&model.x_cart, &model.x_cart, &rhs),
            tol,
        ));
    }

    let lf = model.lambda as f64;
    let edge = (1.0 + (lf + 1.0) * (lf + 1.0) / model.k) * (lf + 1.0) / (2.0 * lf + 1.0);
    let r2_want = &(&id + &(&model.l2 + &id).scale_real(1.0 / model.k)) - &p_top.scale_real(edge);
    out.push(Check::new("R^2", "R^2D=3", model.r2.max_diff(&r2_want), tol));

    let spherical_r2 = &(&(model.xa(1) * model.xa(-1)) + &(model.xa(-1) * model.xa(1))) + &(model.xa(0) * model.xa(0));
    out.push(Check::new("x^a x^-a = x^i x^i", "R^2D=3", spherical_r2.max_diff(&model.r2), tol));

    let lam = model.lambda_op();
    let lam_eq = (&(&lam * &lam) + &lam).max_diff(&model.l2);
    out.push(Check::new("λ(λ+1) = L^2", "L^2eigen", lam_eq, tol));

    let ranks = (0..=big)
        .map(|l| (model.projector(l).trace().re - (2 * l + 1) as f64).abs())
        .fold(0.0, f64::max);
    out.push(Check::new("rank P_l = 2l+1", "deco1", ranks, 0.0));
    out.push(Check::new("H = diag(l(l+1))", "defLD=3", model.h_bar.max_diff(&model.l2), tol));
    out
}

/// Dimension of the span of words of length `<= max_len` in x̄⁺, x̄⁰, x̄⁻.
pub fn generated_dimension(model: &SphereModel, max_len: usize) -> usize {
    word_span_dimension(&[model.xa(1), model.xa(0), model.xa(-1)], max_len, 1e-8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_sphere;
    use harmonics::LadderTable;

    #[test]
    fn lambda_two_default_schedule() {
        let m = build_sphere(2, 36.0, &LadderTable::new(2)).unwrap();
        let report = verify_prop31(&m);
        assert!(report.all_pass(), "{:?}", report.failures());
        assert!(report.get("[x^i, x^j] at k = Λ²(Λ+1)²").is_some());
    }

    #[test]
    fn epsilon_is_antisymmetric() {
        for i in 0..3 {
            for j in 0..3 {
                for h in 0..3 {
                    assert_eq!(epsilon(i, j, h), -epsilon(j, i, h));
                }
            }
        }
        assert_eq!(epsilon(0, 1, 2), 1.0);
    }

    #[test]
    fn generates_full_algebra_small() {
        let m = build_sphere(1, 4.0, &LadderTable::new(1)).unwrap();
        assert_eq!(generated_dimension(&m, 4), 16);
    }
}
