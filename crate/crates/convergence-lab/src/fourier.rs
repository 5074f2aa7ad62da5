use std::f64::consts::PI;

use linalg_core::C64;

use crate::{LabError, Result};

/// `Σ_{|m|<=N} φ_m u^m` with `u = e^{iφ}`; coefficient `m` at `m + N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedFourier {
    n: usize,
    coeffs: Vec<C64>,
}

impl TruncatedFourier {
    pub fn new(n: usize, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != 2 * n + 1 {
            return Err(LabError::BadLength { expected: 2 * n + 1, got: coeffs.len() });
        }
        Ok(Self { n, coeffs })
    }

    pub fn from_fn(n: usize, f: impl Fn(i64) -> C64) -> Self {
        let big = n as i64;
        Self { n, coeffs: (-big..=big).map(f).collect() }
    }

    pub fn constant(c: C64) -> Self {
        Self { n: 0, coeffs: vec![c] }
    }

    /// `u^m`.
    pub fn monomial(m: i64) -> Self {
        Self::from_fn(m.unsigned_abs() as usize, |j| if j == m { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, m: i64) -> C64 {
        if m.unsigned_abs() as usize > self.n {
            return C64::new(0.0, 0.0);
        }
        self.coeffs[(m + self.n as i64) as usize]
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(LabError::ZeroFunction);
        }
        Ok(Self { n: self.n, coeffs: self.coeffs.iter().map(|c| c / n).collect() })
    }

    /// `F = max_m |f_m|`.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, phi: f64) -> C64 {
        let big = self.n as i64;
        (-big..=big).map(|m| self.get(m) * C64::from_polar(1.0, m as f64 * phi)).sum()
    }

    fn sample_points(&self) -> usize {
        (64 * (self.n + 1)).max(1 << 14)
    }

    /// Largest `|f|` over an equispaced sample; a lower estimate of `‖f‖_∞`.
    pub fn sup_norm(&self) -> f64 {
        let s = self.sample_points();
        (0..s).map(|j| self.eval(2.0 * PI * j as f64 / s as f64).norm()).fold(0.0, f64::max)
    }

    /// Upper bound on `‖f‖_∞`: the sampled maximum plus half a spacing times
    /// `Σ |m f_m| >= ‖f'‖_∞`.
    pub fn sup_norm_bound(&self) -> f64 {
        let big = self.n as i64;
        let lip: f64 = (-big..=big).map(|m| m.abs() as f64 * self.get(m).norm()).sum();
        self.sup_norm() + PI / self.sample_points() as f64 * lip
    }

    /// Coefficients of the pointwise product (a convolution).
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let (a, b) = (self.n as i64, other.n as i64);
        Self::from_fn(n, |j| {
            let lo = (-a).max(j - b);
            let hi = a.min(j + b);
            (lo..=hi).map(|m| self.get(m) * other.get(j - m)).sum()
        })
    }

    /// `φ_Λ`: coefficients with `|m| <= Λ`.
    pub fn truncate(&self, lambda: usize) -> Self {
        let l = lambda.min(self.n) as i64;
        Self::from_fn(l as usize, |m| self.get(m))
    }

    /// `Σ_{|m|>Λ} |φ_m|²`.
    pub fn tail_norm_sqr(&self, lambda: usize) -> f64 {
        let big = self.n as i64;
        (-big..=big).filter(|m| m.unsigned_abs() as usize > lambda).map(|m| self.get(m).norm_sqr()).sum()
    }

    /// `f_{-m} = conj(f_m)`, i.e. `f` is real-valued.
    pub fn is_real(&self, tol: f64) -> bool {
        let big = self.n as i64;
        (0..=big).all(|m| (self.get(-m) - self.get(m).conj()).norm() <= tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn product_of_monomials() {
        let p = TruncatedFourier::monomial(2).mul(&TruncatedFourier::monomial(-3));
        assert_eq!(p.degree(), 5);
        assert_eq!(p.get(-1), c(1.0, 0.0));
        assert!((p.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn product_matches_pointwise() {
        let f = TruncatedFourier::new(2, vec![c(0.3, 0.1), c(-1.0, 0.0), c(0.5, 0.0), c(0.0, 2.0), c(0.25, -0.5)]).unwrap();
        let g = TruncatedFourier::new(1, vec![c(1.0, 1.0), c(0.0, 0.0), c(-0.5, 0.2)]).unwrap();
        let fg = f.mul(&g);
        for x in [0.0, 0.7, 2.1, 5.9] {
            assert!((fg.eval(x) - f.eval(x) * g.eval(x)).norm() < 1e-13);
        }
    }

    #[test]
    fn sup_norm_of_cosine() {
        let f = TruncatedFourier::new(1, vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((f.sup_norm() - 2.0).abs() < 1e-12);
        assert!(f.sup_norm_bound() >= 2.0);
        assert!(f.sup_norm_bound() < 2.0 + 1e-3);
    }

    #[test]
    fn truncation_and_tail() {
        let f = TruncatedFourier::from_fn(4, |m| c(m as f64, 0.0));
        assert_eq!(f.truncate(2).degree(), 2);
        assert_eq!(f.tail_norm_sqr(2), 2.0 * (9.0 + 16.0));
        assert!((f.truncate(2).norm_sqr() + f.tail_norm_sqr(2) - f.norm_sqr()).abs() < 1e-12);
    }

    #[test]
    fn rejects_wrong_length() {
        assert_eq!(TruncatedFourier::new(1, vec![c(0.0, 0.0)]), Err(LabError::BadLength { expected: 3, got: 1 }));
        assert_eq!(TruncatedFourier::constant(c(0.0, 0.0)).normalized(), Err(LabError::ZeroFunction));
    }
}
