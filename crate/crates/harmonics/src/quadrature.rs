use std::f64::consts::PI;

use linalg_core::C64;

use crate::HarmonicsError;

/// Gauss–Legendre nodes and weights on [-1, 1], ascending nodes.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess, then Newton on P_n.
        let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                let (_, d) = legendre_and_derivative(n, z);
                dp = d;
                break;
            }
        }
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

fn legendre_and_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (z * p1 - p0) / (z * z - 1.0))
}

/// Product grid: Gauss–Legendre in cos θ times uniform φ.
#[derive(Debug, Clone)]
pub struct SphereGrid {
    pub n_theta: usize,
    pub n_phi: usize,
    pub theta: Vec<f64>,
    pub w_theta: Vec<f64>,
    pub phi: Vec<f64>,
    pub w_phi: f64,
}

impl SphereGrid {
    pub fn new(n_theta: usize, n_phi: usize) -> Self {
        let (x, w) = gauss_legendre(n_theta);
        Self {
            n_theta,
            n_phi,
            theta: x.iter().map(|c| c.acos()).collect(),
            w_theta: w,
            phi: (0..n_phi).map(|j| 2.0 * PI * j as f64 / n_phi as f64).collect(),
            w_phi: 2.0 * PI / n_phi as f64,
        }
    }

    /// Default resolution for harmonics up to degree `2 * lambda_max`.
    pub fn for_lambda(lambda_max: usize) -> Self {
        Self::new(2 * lambda_max + 16, 4 * lambda_max + 33)
    }

    pub fn len(&self) -> usize {
        self.n_theta * self.n_phi
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Samples `f(θ, φ)` with θ as the slow index.
    pub fn sample(&self, f: impl Fn(f64, f64) -> C64) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.len());
        for &th in &self.theta {
            for &ph in &self.phi {
                out.push(f(th, ph));
            }
        }
        out
    }

    pub fn weight(&self, index: usize) -> f64 {
        self.w_theta[index / self.n_phi] * self.w_phi
    }
}

/// `∫ conj(f) g dΩ` on the grid.
pub fn sphere_inner_product(f: &[C64], g: &[C64], grid: &SphereGrid) -> Result<C64, HarmonicsError> {
    for s in [f, g] {
        if s.len() != grid.len() {
            return Err(HarmonicsError::ShapeMismatch { expected: grid.len(), got: s.len() });
        }
    }
    let mut acc = C64::new(0.0, 0.0);
    for (i, (a, b)) in f.iter().zip(g).enumerate() {
        acc += a.conj() * b * grid.weight(i);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{b_coef, eval_ylm, t_component};

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre(7);
        for deg in 0..14 {
            let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg)).sum();
            let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
            assert!((q - exact).abs() < 1e-14, "degree {deg}");
        }
        assert!(x.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn area_of_sphere() {
        let g = SphereGrid::new(4, 5);
        let one = g.sample(|_, _| C64::new(1.0, 0.0));
        let v = sphere_inner_product(&one, &one, &g).unwrap();
        assert!((v.re - 4.0 * PI).abs() < 1e-13);
        let total_phi: f64 = g.w_phi * g.n_phi as f64;
        assert!((total_phi - 2.0 * PI).abs() < 1e-15);
    }

    #[test]
    fn projection_of_cos_times_constant() {
        let g = SphereGrid::new(12, 13);
        let y10 = g.sample(|t, p| eval_ylm(1, 0, t, p).unwrap());
        let ty00 = g.sample(|t, p| t_component(0, t, p) * eval_ylm(0, 0, t, p).unwrap());
        let v = sphere_inner_product(&y10, &ty00, &g).unwrap();
        assert!((v.re - b_coef(0, 0, 0)).abs() < 1e-15);
        assert!((v.re - (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn normalized_y21() {
        let g = SphereGrid::new(8, 9);
        let y = g.sample(|t, p| eval_ylm(2, 1, t, p).unwrap());
        assert!((sphere_inner_product(&y, &y, &g).unwrap().re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let g = SphereGrid::new(3, 3);
        let short = vec![C64::new(0.0, 0.0); 4];
        assert!(sphere_inner_product(&short, &short, &g).is_err());
    }
}
