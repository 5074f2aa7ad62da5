use std::f64::consts::PI;

use crate::OracleError;

/// `∫ e^{−aρ²+bρ} ρⁿ dρ` over the real line, by completing the square.
pub fn gaussian_moment(a: f64, b: f64, n: u32) -> Result<f64, OracleError> {
    if !(a > 0.0) {
        return Err(OracleError::NonPositiveWidth(a));
    }
    let shift = b / (2.0 * a);
    let mut sum = 0.0;
    let mut binom = 1.0; // C(n, j)
    let mut dfact = 1.0; // (j−1)!! for even j
    for j in 0..=n {
        if j > 0 {
            binom *= (n - j + 1) as f64 / j as f64;
        }
        if j % 2 == 0 {
            if j > 0 {
                dfact *= (j - 1) as f64;
            }
            let h = (j / 2) as i32;
            sum += binom * shift.powi((n - j) as i32) * dfact / (2.0 * a).powi(h);
        }
    }
    Ok((b * b / (4.0 * a)).exp() * (PI / a).sqrt() * sum)
}

/// `∫ p(x₀+z) e^{−cz²} dz` for a polynomial `p` (coefficients ascending).
pub(crate) fn centered_integral(p: &[f64], x0: f64, c: f64) -> f64 {
    shift_poly(p, x0)
        .iter()
        .enumerate()
        .step_by(2)
        .map(|(j, q)| q * gaussian_moment(c, 0.0, j as u32).expect("c > 0"))
        .sum()
}

/// Coefficients of `z ↦ p(x₀+z)`.
pub(crate) fn shift_poly(p: &[f64], x0: f64) -> Vec<f64> {
    let mut out = vec![0.0; p.len()];
    // Horner on polynomials: out = (...(p_n)(x0+z) + p_{n−1})...
    for &c in p.iter().rev() {
        let mut next = vec![0.0; out.len()];
        for j in 0..out.len() {
            next[j] += out[j] * x0;
            if j + 1 < out.len() {
                next[j + 1] += out[j];
            }
        }
        next[0] += c;
        out = next;
    }
    out
}

pub(crate) fn eval_poly(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

pub(crate) fn derive_poly(p: &[f64]) -> Vec<f64> {
    p.iter().enumerate().skip(1).map(|(j, c)| j as f64 * c).collect()
}

/// `p(ρ) e^{sρ}`: the integrands that appear in the circle matrix elements.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpPoly {
    /// Ascending coefficients of `p`.
    pub coeffs: Vec<f64>,
    pub rate: f64,
}

impl ExpPoly {
    pub fn polynomial(coeffs: Vec<f64>) -> Self {
        Self { coeffs, rate: 0.0 }
    }

    pub fn constant(c: f64) -> Self {
        Self::polynomial(vec![c])
    }

    pub fn exp(rate: f64) -> Self {
        Self { coeffs: vec![1.0], rate }
    }

    pub fn eval(&self, x: f64) -> f64 {
        eval_poly(&self.coeffs, x) * (self.rate * x).exp()
    }

    pub fn derivative(&self) -> Self {
        let mut coeffs = derive_poly(&self.coeffs);
        coeffs.resize(self.coeffs.len().max(1), 0.0);
        for (c, p) in coeffs.iter_mut().zip(&self.coeffs) {
            *c += self.rate * p;
        }
        Self { coeffs, rate: self.rate }
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |f, _| f.derivative())
    }
}

/// A Gaussian radial profile `exp(−(x − center)² · stiffness / 2)` times a
/// Hermite polynomial of the given order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianProfile {
    pub center: f64,
    pub stiffness: f64,
    pub hermite_order: u32,
}

impl GaussianProfile {
    pub fn new(center: f64, stiffness: f64, hermite_order: u32) -> Result<Self, OracleError> {
        if !(stiffness > 0.0) {
            return Err(OracleError::NonPositiveWidth(stiffness));
        }
        Ok(Self { center, stiffness, hermite_order })
    }

    /// Oscillator length `stiffness^{−1/2}`.
    pub fn length(&self) -> f64 {
        self.stiffness.sqrt().recip()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let y = (x - self.center) * self.stiffness.sqrt();
        hermite(self.hermite_order, y) * (-0.5 * y * y).exp()
    }
}

/// Physicists' Hermite polynomial.
fn hermite(n: u32, y: f64) -> f64 {
    let (mut h0, mut h1) = (1.0, 2.0 * y);
    if n == 0 {
        return h0;
    }
    for j in 1..n {
        let h2 = 2.0 * y * h1 - 2.0 * j as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrate;

    #[test]
    fn trivial_moments() {
        assert!((gaussian_moment(1.0, 0.0, 0).unwrap() - PI.sqrt()).abs() < 1e-15);
        assert!((gaussian_moment(1.0, 0.0, 2).unwrap() - PI.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(gaussian_moment(1.0, 0.0, 3).unwrap(), 0.0);
        assert!(gaussian_moment(0.0, 1.0, 0).is_err());
        assert!(gaussian_moment(-1.0, 1.0, 0).is_err());
    }

    #[test]
    fn moment_matches_quadrature() {
        for (a, b, n) in [(2.0, 1.0, 3), (0.5, -0.7, 6), (7.0, 3.0, 1)] {
            let exact = gaussian_moment(a, b, n).unwrap();
            let q = integrate(|x: f64| (-a * x * x + b * x).exp() * x.powi(n as i32), -40.0, 40.0, 1e-14);
            assert!((exact - q).abs() <= 1e-12 * exact.abs(), "({a},{b},{n}): {exact} vs {q}");
        }
    }

    #[test]
    fn shifted_polynomial() {
        let p = [1.0, -2.0, 0.5, 3.0];
        let q = shift_poly(&p, 0.7);
        for z in [-1.0, 0.0, 0.3, 2.0] {
            assert!((eval_poly(&q, z) - eval_poly(&p, 0.7 + z)).abs() < 1e-13);
        }
    }

    #[test]
    fn exp_poly_derivative() {
        let f = ExpPoly { coeffs: vec![1.0, 2.0], rate: -1.0 };
        let d = f.derivative();
        let x: f64 = 0.4;
        let want = 2.0 * (-x).exp() - (1.0 + 2.0 * x) * (-x).exp();
        assert!((d.eval(x) - want).abs() < 1e-15);
        assert_eq!(ExpPoly::constant(3.0).derivative().eval(1.0), 0.0);
    }

    #[test]
    fn hermite_values() {
        assert_eq!(hermite(2, 1.5), 4.0 * 2.25 - 2.0);
        assert_eq!(hermite(3, 1.0), 8.0 - 12.0);
        let g = GaussianProfile::new(1.0, 4.0, 0).unwrap();
        assert_eq!(g.eval(1.0), 1.0);
        assert_eq!(g.length(), 0.5);
        assert!(GaussianProfile::new(0.0, 0.0, 0).is_err());
    }
}
