use linalg_core::OperatorMatrix;

use crate::{build_so4_realization, SphereModel};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum O3Kind {
    /// `exp(i α·L̄)`.
    Rotation([f64; 3]),
    Parity,
}

#[derive(Debug, Clone)]
pub struct O3Transformed {
    pub unitary: OperatorMatrix,
    pub x_cart: [OperatorMatrix; 3],
    pub l_cart: [OperatorMatrix; 3],
    /// The 3×3 matrix `R` with `U x̄ⁱ U† = R_ij x̄ʲ` predicted for this kind.
    pub expected_map: [[f64; 3]; 3],
}

/// Active rotation by `|α|` about `α/|α|` (Rodrigues).
fn rotation_matrix(alpha: [f64; 3]) -> [[f64; 3]; 3] {
    let theta = (alpha[0] * alpha[0] + alpha[1] * alpha[1] + alpha[2] * alpha[2]).sqrt();
    let mut r = [[0.0; 3]; 3];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    if theta == 0.0 {
        return r;
    }
    let n = alpha.map(|a| a / theta);
    let k = [[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]];
    let (s, c) = theta.sin_cos();
    for i in 0..3 {
        for j in 0..3 {
            let k2: f64 = (0..3).map(|h| k[i][h] * k[h][j]).sum();
            r[i][j] += s * k[i][j] + (1.0 - c) * k2;
        }
    }
    r
}

pub fn o3_transform(model: &SphereModel, kind: O3Kind) -> O3Transformed {
    let (unitary, expected_map) = match kind {
        O3Kind::Rotation(alpha) => {
            let mut gen = OperatorMatrix::zeros(model.dim());
            for (a, l) in alpha.iter().zip(&model.l_cart) {
                gen += &l.scale_real(*a);
            }
            (gen.exp_i_hermitian(1.0).expect("α·L is Hermitian"), rotation_matrix(alpha))
        }
        O3Kind::Parity => {
            // Exchanging the two su(2) factors acts as (−1)^l on the
            // coupled basis, up to a global sign.
            let u = model.function_of_l(|l| if (l as i64) % 2 == 0 { 1.0 } else { -1.0 });
            (u, [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -1.0]])
        }
    };
    O3Transformed {
        x_cart: model.x_cart.clone().map(|x| x.conjugate_by(&unitary)),
        l_cart: model.l_cart.clone().map(|l| l.conjugate_by(&unitary)),
        unitary,
        expected_map,
    }
}

impl O3Transformed {
    /// Largest deviation of the transformed x̄ⁱ from `R_ij x̄ʲ` and of L̄ᵢ
    /// from `det(R) R_ij L̄ʲ`.
    pub fn vector_residual(&self, model: &SphereModel) -> f64 {
        let r = &self.expected_map;
        let det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
        let mut worst = 0.0f64;
        for i in 0..3 {
            let mut x = OperatorMatrix::zeros(model.dim());
            let mut l = OperatorMatrix::zeros(model.dim());
            for j in 0..3 {
                x += &model.x_cart[j].scale_real(r[i][j]);
                l += &model.l_cart[j].scale_real(det * r[i][j]);
            }
            worst = worst.max(self.x_cart[i].max_diff(&x)).max(self.l_cart[i].max_diff(&l));
        }
        worst
    }

    /// The transformed operators packaged as a model, for re-running the
    /// relation checks.
    pub fn as_model(&self, model: &SphereModel) -> SphereModel {
        let mut out = model.clone();
        out.x_cart = self.x_cart.clone();
        out.l_cart = self.l_cart.clone();
        out.x = model.x.clone().map(|x| x.conjugate_by(&self.unitary));
        out.l = model.l.clone().map(|l| l.conjugate_by(&self.unitary));
        out.l2 = model.l2.conjugate_by(&self.unitary);
        out.r2 = model.r2.conjugate_by(&self.unitary);
        out
    }

    /// For parity: residual of `U E¹ᵢ U† = E²ᵢ`.
    pub fn swap_residual(&self, model: &SphereModel) -> f64 {
        let so4 = build_so4_realization(model);
        (0..3).map(|i| so4.e1[i].conjugate_by(&self.unitary).max_diff(&so4.e2[i])).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_sphere, verify_prop31};
    use harmonics::LadderTable;

    fn model() -> SphereModel {
        build_sphere(3, 144.0, &LadderTable::new(3)).unwrap()
    }

    #[test]
    fn parity_flips_coordinates() {
        let m = model();
        let t = o3_transform(&m, O3Kind::Parity);
        for i in 0..3 {
            assert!(t.x_cart[i].max_diff(&(-&m.x_cart[i])) < 1e-11);
            assert!(t.l_cart[i].max_diff(&m.l_cart[i]) < 1e-11);
        }
        assert!(t.swap_residual(&m) < 1e-12);
    }

    #[test]
    fn zero_rotation_is_identity() {
        let m = model();
        let t = o3_transform(&m, O3Kind::Rotation([0.0; 3]));
        assert!(t.vector_residual(&m) < 1e-13);
        assert!(t.x_cart[0].max_diff(&m.x_cart[0]) < 1e-13);
    }

    #[test]
    fn rotation_about_z() {
        let m = model();
        let t = o3_transform(&m, O3Kind::Rotation([0.0, 0.0, 0.4]));
        assert!(t.vector_residual(&m) < 1e-12);
        let report = verify_prop31(&t.as_model(&m));
        assert!(report.all_pass(), "{:?}", report.failures());
    }
}
