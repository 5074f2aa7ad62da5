use std::f64::consts::FRAC_1_SQRT_2;

use linalg_core::{OperatorMatrix, C64};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CircleError {
    #[error("Λ must be at least 1, got {0}")]
    LambdaTooSmall(i64),
    #[error("k must be positive and finite, got {0}")]
    BadK(f64),
}

#[derive(Debug, Clone)]
pub struct CircleModel {
    pub lambda: usize,
    pub k: f64,
    pub xi_plus: OperatorMatrix,
    pub xi_minus: OperatorMatrix,
    pub l_bar: OperatorMatrix,
    pub h_bar: OperatorMatrix,
    pub r2: OperatorMatrix,
    /// Set when Λ² < 2√(2k) − 2 fails.
    pub inconsistent: bool,
}

/// `k = Λ²(Λ+1)²`.
pub fn default_k_schedule(lambda: usize) -> f64 {
    let l = lambda as f64;
    l * l * (l + 1.0) * (l + 1.0)
}

pub fn build_circle(lambda: usize, k: f64) -> Result<CircleModel, CircleError> {
    if lambda < 1 {
        return Err(CircleError::LambdaTooSmall(lambda as i64));
    }
    if !(k > 0.0 && k.is_finite()) {
        return Err(CircleError::BadK(k));
    }
    let dim = 2 * lambda + 1;
    let big = lambda as i64;
    let mut xi_plus = OperatorMatrix::zeros(dim);
    for m in -big..big {
        let mf = m as f64;
        let c = FRAC_1_SQRT_2 * (1.0 + mf * (mf + 1.0) / k).sqrt();
        xi_plus[((m + 1 + big) as usize, (m + big) as usize)] = C64::new(c, 0.0);
    }
    let xi_minus = xi_plus.adjoint();
    let ms: Vec<f64> = (-big..=big).map(|m| m as f64).collect();
    let l_bar = OperatorMatrix::diag(&ms);
    let h_bar = OperatorMatrix::diag(&ms.iter().map(|m| m * m).collect::<Vec<_>>());
    let r2 = &(&xi_plus * &xi_minus) + &(&xi_minus * &xi_plus);
    let lf = lambda as f64;
    let inconsistent = lf * lf >= 2.0 * (2.0 * k).sqrt() - 2.0;
    Ok(CircleModel { lambda, k, xi_plus, xi_minus, l_bar, h_bar, r2, inconsistent })
}

impl CircleModel {
    pub fn dim(&self) -> usize {
        2 * self.lambda + 1
    }

    /// Row of `ψ_m`.
    pub fn index(&self, m: i64) -> usize {
        (m + self.lambda as i64) as usize
    }

    pub fn ms(&self) -> impl Iterator<Item = i64> {
        let l = self.lambda as i64;
        -l..=l
    }

    /// `μ = 1 + Λ(Λ+1)/k`.
    pub fn mu(&self) -> f64 {
        let l = self.lambda as f64;
        1.0 + l * (l + 1.0) / self.k
    }

    /// Rank-one projector on `ψ_m`.
    pub fn projector(&self, m: i64) -> OperatorMatrix {
        let mut p = OperatorMatrix::zeros(self.dim());
        let i = self.index(m);
        p[(i, i)] = C64::new(1.0, 0.0);
        p
    }

    /// `f(L̄)` for a function of the spectrum variable.
    pub fn function_of_l(&self, f: impl Fn(f64) -> f64) -> OperatorMatrix {
        OperatorMatrix::diag(&self.ms().map(|m| f(m as f64)).collect::<Vec<_>>())
    }
}
