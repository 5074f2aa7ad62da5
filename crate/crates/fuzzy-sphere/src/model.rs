use std::f64::consts::FRAC_1_SQRT_2;

use harmonics::LadderTable;
use linalg_core::{OperatorMatrix, C64, I};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SphereError {
    #[error("Λ must be at least 1, got {0}")]
    LambdaTooSmall(usize),
    #[error("k must be positive and finite, got {0}")]
    BadK(f64),
    #[error("ladder table covers l <= {have}, need {need}")]
    LadderTableTooSmall { need: i32, have: i32 },
    #[error("harmonic degree {l} exceeds 2Λ = {max}")]
    DegreeTooHigh { l: usize, max: usize },
}

#[derive(Debug, Clone)]
pub struct SphereModel {
    pub lambda: usize,
    pub k: f64,
    /// x̄ᵃ at index a+1.
    pub x: [OperatorMatrix; 3],
    pub x_cart: [OperatorMatrix; 3],
    /// L̄ₐ at index a+1.
    pub l: [OperatorMatrix; 3],
    pub l_cart: [OperatorMatrix; 3],
    pub l2: OperatorMatrix,
    pub h_bar: OperatorMatrix,
    pub r2: OperatorMatrix,
    /// `c_0 ..= c_{Λ+1}`.
    pub c: Vec<f64>,
    /// Set when Λ(Λ+1) <= 2√(2k) fails.
    pub inconsistent: bool,
}

/// `k = Λ²(Λ+1)²`.
pub fn default_k_schedule(lambda: usize) -> f64 {
    let l = lambda as f64;
    l * l * (l + 1.0) * (l + 1.0)
}

pub fn flat_index(l: i32, m: i32) -> usize {
    (l * l + l + m) as usize
}

/// Cartesian components from spherical ones given as `[v⁻, v⁰, v⁺]`.
pub fn cartesian(v: &[OperatorMatrix; 3]) -> [OperatorMatrix; 3] {
    let [minus, zero, plus] = v;
    [
        (plus + minus).scale_real(FRAC_1_SQRT_2),
        (plus - minus).scale(-I * FRAC_1_SQRT_2),
        zero.clone(),
    ]
}

/// Block operator `ψ_l^m → w_l A ψ_{l-1}^{m+a} + w_{l+1} B ψ_{l+1}^{m+a}`
/// with `w` indexed `0..=Λ+1`.
pub(crate) fn vector_operator(lambda: usize, a: i32, w: &[f64], table: &LadderTable) -> OperatorMatrix {
    let big = lambda as i32;
    let mut op = OperatorMatrix::zeros((lambda + 1) * (lambda + 1));
    for l in 0..=big {
        for m in -l..=l {
            let col = flat_index(l, m);
            let mt = m + a;
            if l >= 1 && mt.abs() < l {
                op[(flat_index(l - 1, mt), col)] = C64::new(w[l as usize] * table.a(a, l, m), 0.0);
            }
            if l < big && mt.abs() <= l + 1 {
                op[(flat_index(l + 1, mt), col)] = C64::new(w[l as usize + 1] * table.b(a, l, m), 0.0);
            }
        }
    }
    op
}

pub(crate) fn angular_momentum(lambda: usize, table: &LadderTable) -> [OperatorMatrix; 3] {
    let big = lambda as i32;
    let n = (lambda + 1) * (lambda + 1);
    let mut out = [OperatorMatrix::zeros(n), OperatorMatrix::zeros(n), OperatorMatrix::zeros(n)];
    for l in 0..=big {
        for m in -l..=l {
            let col = flat_index(l, m);
            out[1][(col, col)] = C64::new(m as f64, 0.0);
            for s in [-1, 1] {
                if (m + s).abs() <= l {
                    out[(s + 1) as usize][(flat_index(l, m + s), col)] = C64::new(table.gamma(s, l, m), 0.0);
                }
            }
        }
    }
    out
}

pub fn build_sphere(lambda: usize, k: f64, table: &LadderTable) -> Result<SphereModel, SphereError> {
    if lambda < 1 {
        return Err(SphereError::LambdaTooSmall(lambda));
    }
    if !(k > 0.0 && k.is_finite()) {
        return Err(SphereError::BadK(k));
    }
    let need = lambda as i32 + 1;
    if table.l_top() < need {
        return Err(SphereError::LadderTableTooSmall { need, have: table.l_top() });
    }
    let mut c = vec![0.0; lambda + 2];
    for (l, cl) in c.iter_mut().enumerate().take(lambda + 1).skip(1) {
        let lf = l as f64;
        *cl = (1.0 + lf * lf / k).sqrt();
    }
    let x = [-1, 0, 1].map(|a| vector_operator(lambda, a, &c, table));
    let l = angular_momentum(lambda, table);
    let x_cart = cartesian(&x);
    let l_cart = cartesian(&l);
    let l2 = sum_of_squares(&l_cart);
    let r2 = sum_of_squares(&x_cart);
    let ls: Vec<f64> = (0..=lambda as i32)
        .flat_map(|l| std::iter::repeat((l * (l + 1)) as f64).take((2 * l + 1) as usize))
        .collect();
    let h_bar = OperatorMatrix::diag(&ls);
    let lf = lambda as f64;
    let inconsistent = lf * (lf + 1.0) > 2.0 * (2.0 * k).sqrt();
    Ok(SphereModel { lambda, k, x, x_cart, l, l_cart, l2, h_bar, r2, c, inconsistent })
}

pub(crate) fn sum_of_squares(v: &[OperatorMatrix; 3]) -> OperatorMatrix {
    let mut acc = &v[0] * &v[0];
    acc += &(&v[1] * &v[1]);
    acc += &(&v[2] * &v[2]);
    acc
}

impl SphereModel {
    pub fn dim(&self) -> usize {
        (self.lambda + 1) * (self.lambda + 1)
    }

    pub fn index(&self, l: i32, m: i32) -> usize {
        flat_index(l, m)
    }

    /// x̄ᵃ for `a ∈ {-1, 0, 1}`.
    pub fn xa(&self, a: i32) -> &OperatorMatrix {
        &self.x[(a + 1) as usize]
    }

    pub fn la(&self, a: i32) -> &OperatorMatrix {
        &self.l[(a + 1) as usize]
    }

    /// Projector on the `l(l+1)` eigenspace of L̄².
    pub fn projector(&self, l: i32) -> OperatorMatrix {
        let mut p = OperatorMatrix::zeros(self.dim());
        for m in -l..=l {
            let i = flat_index(l, m);
            p[(i, i)] = C64::new(1.0, 0.0);
        }
        p
    }

    /// λ = diag(l).
    pub fn lambda_op(&self) -> OperatorMatrix {
        self.function_of_l(|l| l)
    }

    pub fn function_of_l(&self, f: impl Fn(f64) -> f64) -> OperatorMatrix {
        let d: Vec<f64> = (0..=self.lambda as i32)
            .flat_map(|l| std::iter::repeat(f(l as f64)).take((2 * l + 1) as usize))
            .collect();
        OperatorMatrix::diag(&d)
    }

    /// `K = 1/k + (1 + Λ²/k)/(2Λ+1)`.
    pub fn k_const(&self) -> f64 {
        let l = self.lambda as f64;
        1.0 / self.k + (1.0 + l * l / self.k) / (2.0 * l + 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SphereModel {
        build_sphere(1, 4.0, &LadderTable::new(1)).unwrap()
    }

    #[test]
    fn c_coefficients() {
        let s = build_sphere(3, 144.0, &LadderTable::new(3)).unwrap();
        assert_eq!(s.c[0], 0.0);
        assert_eq!(s.c[4], 0.0);
        assert!((s.c[2] - (1.0f64 + 4.0 / 144.0).sqrt()).abs() < 1e-16);
    }

    #[test]
    fn x0_on_l1() {
        let s = small();
        let v = s.xa(0)[(flat_index(0, 0), flat_index(1, 0))].re;
        assert!((v - 5f64.sqrt() / 2.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((v - 0.645497).abs() < 1e-6);
    }

    #[test]
    fn top_shell_does_not_leak() {
        let s = small();
        for a in -1..=1 {
            for m in -1..=1 {
                let col = s.xa(a).column(flat_index(1, m));
                // only l = 0 (row 0) may be reached from l = Λ = 1
                assert!(col.iter().skip(1).all(|z| z.norm() == 0.0));
            }
        }
    }

    #[test]
    fn l_plus_raises() {
        let s = small();
        assert!((s.la(1)[(flat_index(1, 0), flat_index(1, -1))].re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hermiticity() {
        let s = build_sphere(3, 144.0, &LadderTable::new(3)).unwrap();
        assert!(s.xa(1).adjoint().max_diff(s.xa(-1)) < 1e-16);
        assert!(s.xa(0).is_hermitian());
        for i in 0..3 {
            assert!(s.x_cart[i].is_hermitian() && s.l_cart[i].is_hermitian());
        }
    }

    #[test]
    fn r2_eigenvalues_small_model() {
        let s = small();
        let d = s.r2.diagonal();
        assert!((d[0].re - 1.25).abs() < 1e-15);
        for i in 1..4 {
            assert!((d[i].re - 5.0 / 12.0).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_small_table_and_flags_consistency() {
        assert!(matches!(
            build_sphere(5, 900.0, &LadderTable::new(2)),
            Err(SphereError::LadderTableTooSmall { .. })
        ));
        assert!(build_sphere(5, 10.0, &LadderTable::new(5)).unwrap().inconsistent);
        assert!(!build_sphere(5, default_k_schedule(5), &LadderTable::new(5)).unwrap().inconsistent);
    }
}
