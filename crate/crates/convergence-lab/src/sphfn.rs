use std::f64::consts::PI;

use fuzzy_sphere::flat_index;
use harmonics::{eval_ylm, SphereGrid};
use linalg_core::C64;

use crate::{LabError, Result};

/// `Σ_{l<=L} Σ_{|m|<=l} φ_l^m Y_l^m`; coefficient `(l, m)` at `l² + l + m`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSphFn {
    l_max: usize,
    coeffs: Vec<C64>,
}

impl TruncatedSphFn {
    pub fn new(l_max: usize, coeffs: Vec<C64>) -> Result<Self> {
        let want = (l_max + 1) * (l_max + 1);
        if coeffs.len() != want {
            return Err(LabError::BadLength { expected: want, got: coeffs.len() });
        }
        Ok(Self { l_max, coeffs })
    }

    pub fn from_fn(l_max: usize, f: impl Fn(usize, i32) -> C64) -> Self {
        let mut coeffs = Vec::with_capacity((l_max + 1) * (l_max + 1));
        for l in 0..=l_max {
            for m in -(l as i32)..=l as i32 {
                coeffs.push(f(l, m));
            }
        }
        Self { l_max, coeffs }
    }

    pub fn constant(c: C64) -> Self {
        Self { l_max: 0, coeffs: vec![c * (4.0 * PI).sqrt()] }
    }

    /// A single `Y_l^m`.
    pub fn harmonic(l: usize, m: i32) -> Self {
        Self::from_fn(l, |j, n| if j == l && n == m { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
    }

    /// `t^a`: `t^0 = √(4π/3) Y_1^0`, `t^± = ∓√(4π/3) Y_1^{±1}`.
    pub fn t_component(a: i32) -> Self {
        let s = (4.0 * PI / 3.0).sqrt();
        let c = match a {
            0 => s,
            1 => -s,
            _ => s,
        };
        Self::from_fn(1, |l, m| if l == 1 && m == a { C64::new(c, 0.0) } else { C64::new(0.0, 0.0) })
    }

    /// Coefficients of `g(θ, φ)` up to degree `l_max`, by quadrature on `grid`.
    pub fn project(l_max: usize, grid: &SphereGrid, g: impl Fn(f64, f64) -> C64) -> Self {
        let table = YlmTable::new(grid, l_max);
        table.analyze(&grid.sample(g), l_max)
    }

    pub fn degree(&self) -> usize {
        self.l_max
    }

    pub fn get(&self, l: usize, m: i32) -> C64 {
        if l > self.l_max || m.unsigned_abs() as usize > l {
            return C64::new(0.0, 0.0);
        }
        self.coeffs[flat_index(l as i32, m)]
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// L² norm over the sphere.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(LabError::ZeroFunction);
        }
        Ok(Self { l_max: self.l_max, coeffs: self.coeffs.iter().map(|c| c / n).collect() })
    }

    pub fn eval(&self, theta: f64, phi: f64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for l in 0..=self.l_max as i32 {
            for m in -l..=l {
                let c = self.coeffs[flat_index(l, m)];
                if c != C64::new(0.0, 0.0) {
                    acc += c * eval_ylm(l, m, theta, phi).expect("|m| <= l");
                }
            }
        }
        acc
    }

    /// `Σ_{l>Λ} |φ_l^m|²`.
    pub fn tail_norm_sqr(&self, lambda: usize) -> f64 {
        if self.l_max <= lambda {
            return 0.0;
        }
        self.coeffs[(lambda + 1) * (lambda + 1)..].iter().map(|c| c.norm_sqr()).sum()
    }

    /// `f_l^{−m} = (−1)^m conj(f_l^m)`, i.e. `f` is real-valued.
    pub fn is_real(&self, tol: f64) -> bool {
        (0..=self.l_max).all(|l| {
            (0..=l as i32).all(|m| {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                (self.get(l, -m) - self.get(l, m).conj() * sign).norm() <= tol
            })
        })
    }
}

/// `Y_l^m` sampled on a grid, for synthesis and analysis.
#[derive(Debug, Clone)]
pub struct YlmTable {
    pub l_max: usize,
    values: Vec<Vec<C64>>,
    weights: Vec<f64>,
}

impl YlmTable {
    pub fn new(grid: &SphereGrid, l_max: usize) -> Self {
        let mut values = Vec::with_capacity((l_max + 1) * (l_max + 1));
        for l in 0..=l_max as i32 {
            for m in -l..=l {
                values.push(grid.sample(|t, p| eval_ylm(l, m, t, p).expect("|m| <= l")));
            }
        }
        Self { l_max, values, weights: (0..grid.len()).map(|i| grid.weight(i)).collect() }
    }

    pub fn synthesize(&self, f: &TruncatedSphFn) -> Vec<C64> {
        assert!(f.degree() <= self.l_max, "table covers degree {}, got {}", self.l_max, f.degree());
        let mut out = vec![C64::new(0.0, 0.0); self.weights.len()];
        for (c, y) in f.coefficients().iter().zip(&self.values) {
            if *c != C64::new(0.0, 0.0) {
                for (o, v) in out.iter_mut().zip(y) {
                    *o += c * v;
                }
            }
        }
        out
    }

    /// Coefficients up to degree `l_max` of sampled values.
    pub fn analyze(&self, samples: &[C64], l_max: usize) -> TruncatedSphFn {
        assert!(l_max <= self.l_max);
        let count = (l_max + 1) * (l_max + 1);
        let coeffs = self.values[..count]
            .iter()
            .map(|y| y.iter().zip(samples).zip(&self.weights).map(|((a, b), w)| a.conj() * b * *w).sum())
            .collect();
        TruncatedSphFn { l_max, coeffs }
    }
}

/// Smallest product grid that integrates band-limited products of total
/// degree `degree` against `Y_l^m`, `l <= degree`, exactly.
pub fn product_grid(degree: usize) -> SphereGrid {
    SphereGrid::new(degree + 1, 2 * degree + 1)
}

/// The integrands have θ-degree and φ-frequency up to `2·degree`.
pub fn check_grid(grid: &SphereGrid, degree: usize) -> Result<()> {
    let (need_theta, need_phi) = (degree + 1, 2 * degree + 1);
    if grid.n_theta < need_theta || grid.n_phi < need_phi {
        return Err(LabError::GridTooCoarse {
            degree,
            have_theta: grid.n_theta,
            have_phi: grid.n_phi,
            need_theta,
            need_phi,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use harmonics::t_component;

    #[test]
    fn t_components_match_pointwise() {
        for a in -1..=1 {
            let f = TruncatedSphFn::t_component(a);
            for (t, p) in [(0.3, 1.1), (2.0, 4.0), (1.2, -0.5)] {
                assert!((f.eval(t, p) - t_component(a, t, p)).norm() < 1e-14, "a={a}");
            }
        }
    }

    #[test]
    fn analysis_inverts_synthesis() {
        let f = TruncatedSphFn::from_fn(4, |l, m| C64::new(l as f64 - 0.5 * m as f64, 0.1 * m as f64));
        let grid = product_grid(4);
        let table = YlmTable::new(&grid, 4);
        let back = table.analyze(&table.synthesize(&f), 4);
        for (a, b) in back.coefficients().iter().zip(f.coefficients()) {
            assert!((a - b).norm() < 1e-13);
        }
    }

    #[test]
    fn constant_has_norm_of_sphere() {
        let c = TruncatedSphFn::constant(C64::new(1.0, 0.0));
        assert!((c.norm_sqr() - 4.0 * PI).abs() < 1e-13);
        assert!((c.eval(0.4, 0.2).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn grid_check() {
        assert!(check_grid(&product_grid(5), 5).is_ok());
        assert!(matches!(check_grid(&SphereGrid::new(5, 30), 5), Err(LabError::GridTooCoarse { need_theta: 6, .. })));
    }

    #[test]
    fn reality_of_t_components() {
        assert!(TruncatedSphFn::t_component(0).is_real(1e-15));
        assert!(!TruncatedSphFn::t_component(1).is_real(1e-15));
    }
}
