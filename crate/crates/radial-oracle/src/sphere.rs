use std::f64::consts::PI;

use crate::gaussian::{centered_integral, derive_poly, eval_poly};
use crate::{integrate, OracleError};

/// Radial data of the D=3 ground profile `f_l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereState {
    pub l: u32,
    /// `k_l = 2k + 3l(l+1)`.
    pub k_l: f64,
    /// `r̃_l − 1 = l(l+1)/(2k + 3l(l+1))`, kept separately to avoid cancellation.
    pub delta: f64,
}

impl SphereState {
    pub fn new(k: f64, l: u32) -> Self {
        let q = (l * (l + 1)) as f64;
        let k_l = 2.0 * k + 3.0 * q;
        Self { l, k_l, delta: q / k_l }
    }

    pub fn r_tilde(&self) -> f64 {
        1.0 + self.delta
    }

    fn root(&self) -> f64 {
        self.k_l.sqrt()
    }

    /// `ln N_l`, `N_l = k_l^{1/8}/π^{1/4}`.
    fn ln_norm(&self) -> f64 {
        0.125 * self.k_l.ln() - 0.25 * PI.ln()
    }
}

/// Weight `g(r)` in `∫ f_l f_L g dr`.
#[derive(Debug, Clone, PartialEq)]
pub enum RadialWeight {
    /// Ascending polynomial coefficients in `r`.
    Poly(Vec<f64>),
    InverseR,
}

struct Overlap {
    c: f64,
    center: f64,
    /// `ln(N_l N_L)` and the completed-square exponent, separately.
    ln_norms: f64,
    exponent: f64,
}

fn overlap(a: &SphereState, b: &SphereState) -> Overlap {
    let (al, be) = (a.root(), b.root());
    let dd = a.delta - b.delta;
    Overlap {
        c: 0.5 * (al + be),
        center: 1.0 + (al * a.delta + be * b.delta) / (al + be),
        ln_norms: a.ln_norm() + b.ln_norm(),
        exponent: -al * be * dd * dd / (2.0 * (al + be)),
    }
}

fn check_pair(l: u32, big_l: u32) -> Result<(), OracleError> {
    if l.abs_diff(big_l) > 1 {
        return Err(OracleError::BadPair { l, big_l });
    }
    Ok(())
}

/// `∫ e^{−c(r−r̂)²} g(r) dr`: Gaussian moments on the whole line for
/// polynomials, quadrature on `r > 0` for `1/r`.
fn gaussian_weighted(g: &RadialWeight, c: f64, center: f64) -> f64 {
    match g {
        RadialWeight::Poly(p) => centered_integral(p, center, c),
        RadialWeight::InverseR => {
            let w = 40.0 / c.sqrt();
            let lo = (-w).max(-0.9 * center);
            integrate(|z| (-c * z * z).exp() / (center + z), lo, w, 1e-14)
        }
    }
}

/// Terms `g^{(2n)}(r̂)` for `n = 0..count`.
fn even_derivatives(g: &RadialWeight, r: f64, count: usize) -> Vec<f64> {
    match g {
        RadialWeight::Poly(p) => {
            let mut out = Vec::with_capacity(count);
            let mut d = p.clone();
            for _ in 0..count {
                out.push(eval_poly(&d, r));
                d = derive_poly(&derive_poly(&d));
            }
            out
        }
        // (1/r)^{(2n)} = (2n)! / r^{2n+1}
        RadialWeight::InverseR => {
            let mut fact = 1.0;
            (0..count)
                .map(|n| {
                    if n > 0 {
                        fact *= (2 * n - 1) as f64 * (2 * n) as f64;
                    }
                    fact / r.powi(2 * n as i32 + 1)
                })
                .collect()
        }
    }
}

/// Terms kept in the truncated series for `1/r`: through order `1/k`.
const SERIES_TERMS: usize = 3;

/// `∫ f_l f_L g dr` exactly and by the truncated Taylor series around `r̂`.
/// Returns `(exact, series)`.
pub fn sphere_radial_integral(g: &RadialWeight, l: u32, big_l: u32, k: f64) -> Result<(f64, f64), OracleError> {
    check_pair(l, big_l)?;
    if !(k > 0.0) {
        return Err(OracleError::BadK(k));
    }
    let (a, b) = (SphereState::new(k, l), SphereState::new(k, big_l));
    let o = overlap(&a, &b);
    let exact = (o.ln_norms + o.exponent).exp() * gaussian_weighted(g, o.c, o.center);
    let terms = match g {
        RadialWeight::Poly(p) => p.len().div_ceil(2).max(1),
        RadialWeight::InverseR => SERIES_TERMS,
    };
    let sum_k = 2.0 * o.c;
    let mut scale = 1.0; // (2n)!! (√k_l + √k_L)^n
    let mut series = 0.0;
    for (n, d) in even_derivatives(g, o.center, terms).into_iter().enumerate() {
        if n > 0 {
            scale *= 2.0 * n as f64 * sum_k;
        }
        series += d / scale;
    }
    Ok((exact, o.exponent.exp() * series))
}

/// `∫ f_{l−1} f_l' dr` three ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivIntegral {
    /// Adaptive quadrature of the integrand on `r > 0`.
    pub quadrature: f64,
    /// Gaussian moments on the whole line.
    pub exact: f64,
    /// `−l/√(2k) + 18l³/(8k√(2k))`.
    pub printed: f64,
}

pub fn sphere_deriv_integral(l: u32, k: f64) -> Result<DerivIntegral, OracleError> {
    if l == 0 {
        return Err(OracleError::BadPair { l, big_l: 0 });
    }
    if !(k > 0.0) {
        return Err(OracleError::BadK(k));
    }
    let (a, b) = (SphereState::new(k, l), SphereState::new(k, l - 1));
    let o = overlap(&a, &b);
    let pref = (o.ln_norms + o.exponent).exp();
    // f_l' = −√k_l (r − r̃_l) f_l
    let al = a.root();
    let g = [al * a.r_tilde(), -al];
    let exact = pref * centered_integral(&g, o.center, o.c);
    let w = 40.0 / o.c.sqrt();
    let quad = pref
        * integrate(
            |z| (-o.c * z * z).exp() * al * (a.delta - (o.center - 1.0) - z),
            (-w).max(-0.9 * o.center),
            w,
            1e-14,
        );
    Ok(DerivIntegral { quadrature: quad, exact, printed: printed_m(l, k) })
}

/// `c_l = √(1 + l²/k)`.
pub fn c_l(l: u32, k: f64) -> f64 {
    (1.0 + (l * l) as f64 / k).sqrt()
}

/// `J_l = 1 + 1/√(8k) − l²/(2k)` as printed.
pub fn printed_j(l: u32, k: f64) -> f64 {
    1.0 + 1.0 / (8.0 * k).sqrt() - (l * l) as f64 / (2.0 * k)
}

/// `M_l = −l/√(2k) + 18l³/(8k√(2k))` as printed.
pub fn printed_m(l: u32, k: f64) -> f64 {
    let (lf, s) = (l as f64, (2.0 * k).sqrt());
    -lf / s + 18.0 * lf.powi(3) / (8.0 * k * s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        for k in [1e4, 1e6, 1e8] {
            for l in 0..4 {
                let (exact, series) = sphere_radial_integral(&RadialWeight::Poly(vec![1.0]), l, l, k).unwrap();
                assert!((exact - 1.0).abs() < 1e-12);
                assert_eq!(series, 1.0);
            }
        }
    }

    #[test]
    fn polynomial_series_terminates() {
        // The series is exact for polynomials up to N N' √(2π/(√k_l+√k_L)) = 1 + O(k⁻²).
        let (e, s) = sphere_radial_integral(&RadialWeight::Poly(vec![0.5, -1.0, 2.0, 1.0]), 3, 2, 1e4).unwrap();
        assert!((e - s).abs() < 1e-7 * e.abs());
    }

    #[test]
    fn inverse_r_by_quadrature_matches_polynomial_bound() {
        // 1/r lies between the tangent-line bounds around r̂; check against
        // a direct quadrature of the product of profiles.
        let k = 1e4;
        let (a, b) = (SphereState::new(k, 2), SphereState::new(k, 1));
        let direct = integrate(
            |r: f64| {
                let fa = (a.ln_norm() - 0.5 * a.root() * (r - a.r_tilde()).powi(2)).exp();
                let fb = (b.ln_norm() - 0.5 * b.root() * (r - b.r_tilde()).powi(2)).exp();
                fa * fb / r
            },
            1e-3,
            3.0,
            1e-14,
        );
        let (exact, _) = sphere_radial_integral(&RadialWeight::InverseR, 2, 1, k).unwrap();
        assert!((exact - direct).abs() < 1e-12 * direct);
    }

    #[test]
    fn derivative_integral_agrees_and_is_positive() {
        for l in 1..=5 {
            let d = sphere_deriv_integral(l, 1e4).unwrap();
            // the integrand's odd part cancels, costing a few digits
            assert!((d.exact - d.quadrature).abs() < 1e-10 * d.exact.abs());
            assert!(d.exact > 0.0);
            assert!(d.printed < 0.0);
        }
        assert!(sphere_deriv_integral(0, 1e4).is_err());
    }

    #[test]
    fn rejects_far_pairs() {
        assert!(sphere_radial_integral(&RadialWeight::InverseR, 3, 1, 1e4).is_err());
    }
}
