use linalg_core::{commutator, Check, CheckSet, OperatorMatrix, C64};

use crate::CircleModel;

/// su(2) generators on the circle space together with the functions that
/// turn them into ξ^±.
#[derive(Debug, Clone)]
pub struct So3Realization {
    pub lambda: usize,
    pub k: f64,
    pub e0: OperatorMatrix,
    pub e_plus: OperatorMatrix,
    pub e_minus: OperatorMatrix,
}

pub fn build_so3_realization(model: &CircleModel) -> So3Realization {
    let n = model.dim();
    let big = model.lambda as i64;
    let ll = (big * (big + 1)) as f64;
    let mut e_plus = OperatorMatrix::zeros(n);
    for m in -big..big {
        let mf = m as f64;
        let c = ((ll - mf * (mf + 1.0)) / 2.0).sqrt();
        e_plus[(model.index(m + 1), model.index(m))] = C64::new(c, 0.0);
    }
    So3Realization {
        lambda: model.lambda,
        k: model.k,
        e0: model.l_bar.clone(),
        e_minus: e_plus.adjoint(),
        e_plus,
    }
}

impl So3Realization {
    fn casimir_value(&self) -> f64 {
        let l = self.lambda as f64;
        l * (l + 1.0)
    }

    /// `f_+(s) = √((1 + s(s−1)/k) / (Λ(Λ+1) − s(s−1)))`; `None` where the
    /// denominator vanishes or turns negative.
    pub fn f_plus(&self, s: f64) -> Option<f64> {
        let den = self.casimir_value() - s * (s - 1.0);
        (den > 0.0).then(|| ((1.0 + s * (s - 1.0) / self.k) / den).sqrt())
    }

    pub fn f_minus(&self, s: f64) -> Option<f64> {
        self.f_plus(s + 1.0)
    }

    /// `f_u(s) = √2 / √(Λ(Λ+1) − s(s−1))`.
    pub fn f_u(&self, s: f64) -> Option<f64> {
        let den = self.casimir_value() - s * (s - 1.0);
        (den > 0.0).then(|| (2.0 / den).sqrt())
    }

    /// `f(E⁰)` with undefined entries set to zero.
    fn diag_of(&self, f: impl Fn(f64) -> Option<f64>) -> OperatorMatrix {
        let d: Vec<f64> = self.e0.diagonal().iter().map(|z| f(z.re).unwrap_or(0.0)).collect();
        OperatorMatrix::diag(&d)
    }

    pub fn f_plus_op(&self) -> OperatorMatrix {
        self.diag_of(|s| self.f_plus(s))
    }

    pub fn f_minus_op(&self) -> OperatorMatrix {
        self.diag_of(|s| self.f_minus(s))
    }

    /// `ū = f_u(E⁰) E⁺`, the unit shift `ψ_m → ψ_{m+1}`.
    pub fn u_bar(&self) -> OperatorMatrix {
        &self.diag_of(|s| self.f_u(s)) * &self.e_plus
    }

    pub fn xi_plus(&self) -> OperatorMatrix {
        &self.f_plus_op() * &self.e_plus
    }

    pub fn xi_minus(&self) -> OperatorMatrix {
        &self.f_minus_op() * &self.e_minus
    }

    pub fn verify(&self, model: &CircleModel) -> CheckSet {
        let n = model.dim();
        let tol = 1e-12 * n as f64;
        let id = OperatorMatrix::identity(n);
        let c = self.casimir_value();
        let mut out = CheckSet::default();

        let pm = commutator(&self.e_plus, &self.e_minus).unwrap().max_diff(&self.e0);
        let zp = commutator(&self.e0, &self.e_plus).unwrap().max_diff(&self.e_plus);
        let zm = commutator(&self.e0, &self.e_minus).unwrap().max_diff(&(-&self.e_minus));
        out.push(Check::new("[E+, E-] = E0", "su2rel", pm, tol));
        out.push(Check::new("[E0, E^pm] = pm E^pm", "su2rel", zp.max(zm), tol));

        let e0_shift = &self.e0 - &id;
        let cas = &(&self.e_plus * &self.e_minus).scale_real(2.0) + &(&self.e0 * &e0_shift);
        out.push(Check::new("Casimir", "casimirsu2", cas.max_diff(&id.scale_real(c)), tol));

        let rec = self.xi_plus().max_diff(&model.xi_plus).max(self.xi_minus().max_diff(&model.xi_minus));
        out.push(Check::new("xi^pm = f_pm(E0) E^pm", "transfD2", rec, tol));

        let inv_p = &self.diag_of(|s| self.f_plus(s).map(f64::recip)) * &model.xi_plus;
        let inv_m = &self.diag_of(|s| self.f_minus(s).map(f64::recip)) * &model.xi_minus;
        let inv = inv_p.max_diff(&self.e_plus).max(inv_m.max_diff(&self.e_minus));
        out.push(Check::new("E^pm = f_pm(L)^-1 xi^pm", "transfD2", inv, tol));

        // f_+(s+1)^{-2} is finite for every s in the spectrum, top row included.
        let k = self.k;
        let inv_sq = model.function_of_l(|s| (c - s * (s + 1.0)) / (1.0 + s * (s + 1.0) / k));
        let lhs = &(&model.xi_minus * &model.xi_plus).scale_real(2.0) * &inv_sq;
        let rhs = &id.scale_real(c) - &(&model.l_bar * &(&model.l_bar + &id));
        out.push(Check::new("2 xi- xi+ f_+(L+1)^-2", "casimirsu2'", lhs.max_diff(&rhs), tol));

        let mut shift = OperatorMatrix::zeros(n);
        for m in -(self.lambda as i64)..self.lambda as i64 {
            shift[(model.index(m + 1), model.index(m))] = C64::new(1.0, 0.0);
        }
        out.push(Check::new("u = f_u(E0) E+", "transfD2", self.u_bar().max_diff(&shift), tol));
        out
    }
}
