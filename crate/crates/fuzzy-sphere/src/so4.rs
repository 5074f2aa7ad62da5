use harmonics::LadderTable;
use linalg_core::{commutator, Check, CheckSet, OperatorMatrix, C64, I};

use crate::model::{cartesian, sum_of_squares, vector_operator};
use crate::prop31::{epsilon, so3_bracket_residual};
use crate::{ln_gamma, SphereModel};

/// `g(l)` from the finite-product form; real and positive.
pub fn g_product_form(l: usize, lambda: usize, k: f64) -> f64 {
    let (lf, big) = (l as f64, lambda as f64);
    let mut ratio = 1.0;
    for h in 0..l {
        ratio *= big + lf - 2.0 * h as f64;
    }
    for h in 0..=l {
        ratio /= big + lf + 1.0 - 2.0 * h as f64;
    }
    if l >= 1 {
        for j in 0..=(l - 1) / 2 {
            let (p, q) = (lf - 2.0 * j as f64, lf - 1.0 - 2.0 * j as f64);
            ratio *= (1.0 + p * p / k) / (1.0 + q * q / k);
        }
    }
    ratio.sqrt()
}

/// `g(l)` from the Gamma-function form. It solves the same recursion as
/// [`g_product_form`] but with a different free constant: the two differ by
/// `coth(π√k/2)^{±1/2}` alternating in `l`.
pub fn g_gamma_form(l: usize, lambda: usize, k: f64) -> f64 {
    let (lf, big, s) = (l as f64, lambda as f64, k.sqrt());
    let lg = |x: f64| ln_gamma(C64::new(x, 0.0)).re;
    let real_part = lg((big + lf) / 2.0 + 1.0) + lg((big - lf + 1.0) / 2.0)
        - lg((big + 1.0 + lf) / 2.0 + 1.0)
        - lg((big - lf) / 2.0 + 1.0);
    // Γ(a+ib)Γ(a−ib) = |Γ(a+ib)|²
    let complex_part = 2.0 * ln_gamma(C64::new(lf / 2.0 + 1.0, s / 2.0)).re
        - s.ln()
        - 2.0 * ln_gamma(C64::new((lf + 1.0) / 2.0, s / 2.0)).re;
    (0.5 * (real_part + complex_part)).exp()
}

/// Generators of so(4) on the `(Λ+1)²`-dimensional space.
#[derive(Debug, Clone)]
pub struct So4Realization {
    pub lambda: usize,
    /// `d_0 ..= d_{Λ+1}`.
    pub d: Vec<f64>,
    /// `g(0) ..= g(Λ)`.
    pub g: Vec<f64>,
    /// Xₐ at index a+1.
    pub x: [OperatorMatrix; 3],
    pub x_cart: [OperatorMatrix; 3],
    pub l_cart: [OperatorMatrix; 3],
    pub e1: [OperatorMatrix; 3],
    pub e2: [OperatorMatrix; 3],
    pub lambda_op: OperatorMatrix,
}

pub fn build_so4_realization(model: &SphereModel) -> So4Realization {
    let big = model.lambda;
    let table = LadderTable::new(big);
    let d: Vec<f64> = (0..=big + 1)
        .map(|l| {
            let (b, l) = ((big + 1) as f64, l as f64);
            (b * b - l * l).sqrt()
        })
        .collect();
    let g: Vec<f64> = (0..=big).map(|l| g_product_form(l, big, model.k)).collect();
    let x = [-1, 0, 1].map(|a| vector_operator(big, a, &d, &table));
    let x_cart = cartesian(&x);
    let l_cart = model.l_cart.clone();
    let e1 = [0, 1, 2].map(|i| (&l_cart[i] + &x_cart[i]).scale_real(0.5));
    let e2 = [0, 1, 2].map(|i| (&l_cart[i] - &x_cart[i]).scale_real(0.5));
    So4Realization { lambda: big, d, g, x, x_cart, l_cart, e1, e2, lambda_op: model.lambda_op() }
}

impl So4Realization {
    /// `g(λ)` as a diagonal matrix.
    pub fn g_op(&self) -> OperatorMatrix {
        diag_by_l(self.lambda, |l| self.g[l])
    }

    pub fn verify(&self, model: &SphereModel) -> CheckSet {
        let n = model.dim();
        let tol = 1e-12 * n as f64;
        let id = OperatorMatrix::identity(n);
        let big = self.lambda as f64;
        let mut out = CheckSet::default();

        out.push(Check::new("[L_i, X_j]", "CRXL", so3_bracket_residual(&self.l_cart, &self.x_cart, &self.x_cart), tol));
        out.push(Check::new("[X_i, X_j]", "CRXL", so3_bracket_residual(&self.x_cart, &self.x_cart, &self.l_cart), tol));

        let mut xl = OperatorMatrix::zeros(n);
        let mut lx = OperatorMatrix::zeros(n);
        for i in 0..3 {
            xl += &(&self.x_cart[i] * &self.l_cart[i]);
            lx += &(&self.l_cart[i] * &self.x_cart[i]);
        }
        out.push(Check::new("X.L = L.X = 0", "u3", xl.max_abs().max(lx.max_abs()), tol));
        let total = &sum_of_squares(&self.x_cart) + &sum_of_squares(&self.l_cart);
        out.push(Check::new("X^2 + L^2 = Λ(Λ+2)", "u3", total.max_diff(&id.scale_real(big * (big + 2.0))), tol));

        let mut cross = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                cross = cross.max(commutator(&self.e1[i], &self.e2[j]).unwrap().max_abs());
            }
        }
        out.push(Check::new("[E1_i, E2_j] = 0", "CRE", cross, tol));
        let su2 = so3_bracket_residual(&self.e1, &self.e1, &self.e1).max(so3_bracket_residual(&self.e2, &self.e2, &self.e2));
        out.push(Check::new("[E_i, E_j] = i eps E_k", "CRE", su2, tol));
        let half = big / 2.0;
        let c_want = id.scale_real(half * (half + 1.0));
        let cas = sum_of_squares(&self.e1).max_diff(&c_want).max(sum_of_squares(&self.e2).max_diff(&c_want));
        out.push(Check::new("C1 = C2 = (Λ/2)(Λ/2+1)", "CRE", cas, tol));

        let g = self.g_op();
        let mut fwd = 0.0f64;
        let mut inv = 0.0f64;
        let g_inv = diag_by_l(self.lambda, |l| 1.0 / self.g[l]);
        for a in 0..3 {
            fwd = fwd.max((&(&g * &self.x[a]) * &g).max_diff(&model.x[a]));
            inv = inv.max((&(&g_inv * &model.x[a]) * &g_inv).max_diff(&self.x[a]));
        }
        out.push(Check::new("x^a = g(λ) X_a g(λ)", "transfD3", fwd, tol));
        out.push(Check::new("X_a = g(λ)^-1 x^a g(λ)^-1", "transfD3", inv, tol));

        let gcond = (1..=self.lambda)
            .map(|l| (self.g[l - 1] * self.g[l] - model.c[l] / self.d[l]).abs())
            .fold(0.0, f64::max);
        out.push(Check::new("g(l-1) g(l) = c_l/d_l", "gcond", gcond, 1e-14));
        out
    }
}

fn diag_by_l(lambda: usize, f: impl Fn(usize) -> f64) -> OperatorMatrix {
    let d: Vec<f64> = (0..=lambda).flat_map(|l| std::iter::repeat(f(l)).take(2 * l + 1)).collect();
    OperatorMatrix::diag(&d)
}

/// `χ_i = i ε^{ijk} X_j L_k` and the ladders ϑ^±_i that shift λ by ±1.
#[derive(Debug, Clone)]
pub struct ThetaLadders {
    pub chi: [OperatorMatrix; 3],
    pub minus: [OperatorMatrix; 3],
    pub plus: [OperatorMatrix; 3],
    pub report: CheckSet,
}

pub fn theta_ladders(real: &So4Realization) -> ThetaLadders {
    let n = real.lambda_op.dim();
    let tol = 1e-12 * n as f64;
    let lam = &real.lambda_op;
    let id = OperatorMatrix::identity(n);
    let l2 = sum_of_squares(&real.l_cart);
    let chi = [0, 1, 2].map(|i| {
        let mut acc = OperatorMatrix::zeros(n);
        for j in 0..3 {
            for k in 0..3 {
                let e = epsilon(i, j, k);
                if e != 0.0 {
                    acc += &(&real.x_cart[j] * &real.l_cart[k]).scale(I * e);
                }
            }
        }
        acc
    });
    let lam_m1 = lam - &id;
    let lam_p1 = lam + &id;
    let minus_factor = &(&lam.scale_real(2.0) - &id) * &lam_m1;
    let plus_factor = lam * &(&lam.scale_real(2.0) + &id.scale_real(3.0));
    let minus = [0, 1, 2].map(|i| &(&(&real.x_cart[i] * lam) - &chi[i]) * &minus_factor);
    let plus = [0, 1, 2].map(|i| &(&(&real.x_cart[i] * &lam_p1) + &chi[i]) * &plus_factor);

    let mut report = CheckSet::default();
    let mut u1 = 0.0f64;
    let mut u2 = 0.0f64;
    let mut shift = 0.0f64;
    let mut eig = 0.0f64;
    let mut adj = 0.0f64;
    let nu_minus = &lam_m1 * lam;
    let nu_plus = &lam_p1 * &(lam + &id.scale_real(2.0));
    for i in 0..3 {
        let x = &real.x_cart[i];
        let rhs = &(x * &l2) + &(x + &chi[i]).scale_real(2.0);
        u1 = u1.max((&l2 * x).max_diff(&rhs));
        let rhs = &(&chi[i] + &x.scale_real(2.0)) * &l2;
        u2 = u2.max((&l2 * &chi[i]).max_diff(&rhs));
        shift = shift.max((lam * &plus[i]).max_diff(&(&plus[i] * &lam_p1)));
        shift = shift.max((lam * &minus[i]).max_diff(&(&minus[i] * &lam_m1)));
        eig = eig.max((&l2 * &minus[i]).max_diff(&(&minus[i] * &nu_minus)));
        eig = eig.max((&l2 * &plus[i]).max_diff(&(&plus[i] * &nu_plus)));
        adj = adj.max(minus[i].adjoint().max_diff(&plus[i]));
    }
    report.push(Check::new("L^2 X_i = X_i L^2 + 2(X_i + chi_i)", "utile2", u1, tol));
    report.push(Check::new("L^2 chi_i = (chi_i + 2 X_i) L^2", "utile2", u2, tol));
    report.push(Check::new("λ theta^pm = theta^pm (λ pm 1)", "L^2eigen", shift, tol));
    report.push(Check::new("L^2 theta^pm = theta^pm nu^pm", "L^2eigen", eig, tol));
    report.push(Check::new("theta^-† = theta^+", "L^2eigen", adj, tol));
    ThetaLadders { chi, minus, plus, report }
}
