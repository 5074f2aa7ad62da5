use std::f64::consts::FRAC_1_SQRT_2;

use linalg_core::{anticommutator, commutator, OperatorMatrix, C64};

use crate::CircleModel;

/// Truncated (order 1/k) projected derivatives and their (anti)commutators.
#[derive(Debug, Clone)]
pub struct ProjectedDerivatives {
    pub plus: OperatorMatrix,
    pub minus: OperatorMatrix,
    pub commutator: OperatorMatrix,
    pub anticommutator: OperatorMatrix,
}

/// `b = −1/2 + 3/(8√(2k)) + 63/(128k)`.
pub fn derivative_offset(k: f64) -> f64 {
    -0.5 + 3.0 / (8.0 * (2.0 * k).sqrt()) + 63.0 / (128.0 * k)
}

/// Coefficient β(m) with `∂̄₊ψ_m = β(m)/√2 · ψ_{m−1}`.
pub fn derivative_coefficient(m: f64, k: f64) -> f64 {
    let s = (2.0 * k).sqrt();
    derivative_offset(k) + m - 3.0 * m / (4.0 * s) - (m * m * m - 1.5 * m * m + 79.0 * m / 32.0) / (2.0 * k)
}

pub fn projected_derivatives(model: &CircleModel) -> ProjectedDerivatives {
    let n = model.dim();
    let big = model.lambda as i64;
    let mut plus = OperatorMatrix::zeros(n);
    for m in (-big + 1)..=big {
        let c = FRAC_1_SQRT_2 * derivative_coefficient(m as f64, model.k);
        plus[(model.index(m - 1), model.index(m))] = C64::new(c, 0.0);
    }
    let minus = plus.adjoint();
    ProjectedDerivatives {
        commutator: commutator(&plus, &minus).unwrap(),
        anticommutator: anticommutator(&plus, &minus).unwrap(),
        plus,
        minus,
    }
}

impl ProjectedDerivatives {
    /// Largest off-diagonal entry of either (anti)commutator; both are
    /// functions of L̄ plus edge corrections, so this must vanish.
    pub fn off_diagonal_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for op in [&self.commutator, &self.anticommutator] {
            for (r, c, z) in op.entries_row_major() {
                if r != c {
                    worst = worst.max(z.norm());
                }
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_circle;

    fn comm_series(m: f64, k: f64) -> f64 {
        let s = (2.0 * k).sqrt();
        m - 3.0 * m / (2.0 * s) - (4.0 * m * m * m + 31.0 * m / 8.0) / (2.0 * k)
    }

    fn anti_series(m: f64, k: f64) -> f64 {
        let s = (2.0 * k).sqrt();
        m * m + 0.25 - (1.5 * m * m + 0.375) / s - (2.0 * m.powi(4) + 47.0 * m * m / 8.0 + 27.0 / 32.0) / (2.0 * k)
    }

    #[test]
    fn leading_coefficient_and_kernel() {
        let model = build_circle(3, 1e12).unwrap();
        let d = projected_derivatives(&model);
        let m = -2;
        let got = d.plus[(model.index(m - 1), model.index(m))].re;
        assert!((got - (m as f64 - 0.5) * FRAC_1_SQRT_2).abs() < 1e-5);
        assert!(d.plus.column(model.index(-3)).iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn lowers_grade_by_one() {
        let model = build_circle(4, 400.0).unwrap();
        let d = projected_derivatives(&model);
        for (r, c, z) in d.plus.entries_row_major() {
            assert!(z.norm() == 0.0 || r + 1 == c);
        }
        assert!(d.off_diagonal_defect() == 0.0);
    }

    #[test]
    fn interior_series_agree_to_next_order() {
        let lambda = 3;
        for k in [1e4, 1e6, 1e8] {
            let model = build_circle(lambda, k).unwrap();
            let d = projected_derivatives(&model);
            for m in -2i64..=2 {
                let i = model.index(m);
                let mf = m as f64;
                let dc = (d.commutator[(i, i)].re - comm_series(mf, k)).abs();
                let da = (d.anticommutator[(i, i)].re - anti_series(mf, k)).abs();
                // next term is O(k^{-3/2}) with coefficient polynomial in m
                assert!(dc * k.powf(1.5) < 200.0, "k={k} m={m} {dc:e}");
                assert!(da * k.powf(1.5) < 200.0, "k={k} m={m} {da:e}");
            }
        }
    }
}
