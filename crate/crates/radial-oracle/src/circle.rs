use std::f64::consts::{FRAC_1_SQRT_2, PI};

use fuzzy_circle::derivative_coefficient;

use crate::gaussian::centered_integral;
use crate::{solve_em, ExpPoly, OracleError};

/// Radial data of the D=2 ground profile with angular number `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleState {
    pub m: i64,
    /// `k_m = 2(k − E')`.
    pub k_m: f64,
    /// `ρ̃_m = E'/k_m`.
    pub rho_m: f64,
}

impl CircleState {
    pub fn new(k: f64, m: i64) -> Result<Self, OracleError> {
        let e = solve_em(k, m, 0)?.e_prime;
        let k_m = 2.0 * (k - e);
        Ok(Self { m, k_m, rho_m: e / k_m })
    }

    fn root(&self) -> f64 {
        self.k_m.sqrt()
    }

    /// `ln N_m`, `N_m = (√k_m/(4π³))^{1/4} e^{−1/(2√k_m) − ρ̃_m}`.
    fn ln_norm(&self) -> f64 {
        0.25 * (self.root() / (4.0 * PI.powi(3))).ln() - 0.5 / self.root() - self.rho_m
    }
}

/// Gaussian-product data of a pair of profiles: the exact parameters or
/// their printed large-k series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlemmaParams {
    pub c: f64,
    pub rho: f64,
    pub k_factor: f64,
}

/// Exact `c_{m,m'}`, `ρ_{m,m'}` and `K_{m,m'}`.
pub fn flemma_params(k: f64, m: i64, m2: i64) -> Result<FlemmaParams, OracleError> {
    let (a, b) = (CircleState::new(k, m)?, CircleState::new(k, m2)?);
    let (c, rho, ln_pref) = product(&a, &b, 2.0);
    Ok(FlemmaParams { c, rho, k_factor: (ln_pref + 0.5 * (PI / c).ln()).exp() })
}

/// The series `c ≈ √(2k)[1 − 1/√(2k) + (3−m²−m'²)/(4k)]`,
/// `ρ ≈ 2/√(2k) + (m²+m'²+2)/(4k)`, `K ≈ 1`.
pub fn flemma_series(k: f64, m: i64, m2: i64) -> FlemmaParams {
    let s = (2.0 * k).sqrt();
    let q = (m * m + m2 * m2) as f64;
    FlemmaParams { c: s * (1.0 - 1.0 / s + (3.0 - q) / (4.0 * k)), rho: 2.0 / s + (q + 2.0) / (4.0 * k), k_factor: 1.0 }
}

/// For the integrand `e^{tρ} × (two Gaussians)`: returns `c`, the centre
/// `ρ₀` and `ln` of the prefactor `N N' 2π e^{(completed square)}`. The
/// square is completed in the cancellation-free form
/// `[t² + 2t(αp+βq) − αβ(p−q)²] / (2(α+β))`.
fn product(a: &CircleState, b: &CircleState, t: f64) -> (f64, f64, f64) {
    let (al, be) = (a.root(), b.root());
    let (p, q) = (a.rho_m, b.rho_m);
    let lin = al * p + be * q;
    let sq = (t * t + 2.0 * t * lin - al * be * (p - q) * (p - q)) / (2.0 * (al + be));
    let c = 0.5 * (al + be);
    (c, (t + lin) / (al + be), a.ln_norm() + b.ln_norm() + (2.0 * PI).ln() + sq)
}

/// Exact value and the printed asymptotic value of one matrix element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixElement {
    pub exact: f64,
    pub asymptotic: f64,
    pub diff: f64,
}

impl MatrixElement {
    fn new(exact: f64, asymptotic: f64) -> Self {
        Self { exact, asymptotic, diff: (exact - asymptotic).abs() }
    }
}

fn exact_element(f: &ExpPoly, a: &CircleState, b: &CircleState) -> f64 {
    let (c, rho0, ln_pref) = product(a, b, 2.0 + f.rate);
    ln_pref.exp() * centered_integral(&f.coeffs, rho0, c)
}

/// `⟨ψ_{m'}, f(ρ) e^{ihφ} ψ_m⟩`. The angular integral only selects
/// `m' − m = h`, so both values are real.
///
/// The asymptotic value is `f + f''/(4c) + f⁗/(32c²)` at `ρ_{m,m'}` with
/// the series parameters and `K = 1`.
pub fn circle_matrix_element(f: &ExpPoly, h: i64, m: i64, m2: i64, k: f64) -> Result<MatrixElement, OracleError> {
    if m2 - m != h {
        return Ok(MatrixElement::new(0.0, 0.0));
    }
    let exact = exact_element(f, &CircleState::new(k, m)?, &CircleState::new(k, m2)?);
    let s = flemma_series(k, m, m2);
    let asym = f.eval(s.rho)
        + f.nth_derivative(2).eval(s.rho) / (4.0 * s.c)
        + f.nth_derivative(4).eval(s.rho) / (32.0 * s.c * s.c);
    Ok(MatrixElement::new(exact, s.k_factor * asym))
}

/// `⟨ψ_{m+1}, x⁺ ψ_m⟩` against `(a/√2)√(1 + m(m+1)/k)`,
/// `a = 1 + 9/(4√(2k)) + 137/(64k)`.
pub fn xplus_element(m: i64, k: f64) -> Result<MatrixElement, OracleError> {
    let exact = exact_element(&ExpPoly::exp(1.0), &CircleState::new(k, m)?, &CircleState::new(k, m + 1)?);
    let s = (2.0 * k).sqrt();
    let a = 1.0 + 9.0 / (4.0 * s) + 137.0 / (64.0 * k);
    let mf = m as f64;
    Ok(MatrixElement::new(FRAC_1_SQRT_2 * exact, FRAC_1_SQRT_2 * a * (1.0 + mf * (mf + 1.0) / k).sqrt()))
}

/// `⟨ψ_{m−1}, ∂₊ ψ_m⟩` against the truncated derivative coefficient of the
/// fuzzy circle. `∂₊ψ_m = e^{−iφ} e^{−ρ} (∂_ρ + m) ψ_m / √2`.
pub fn dplus_element(m: i64, k: f64) -> Result<MatrixElement, OracleError> {
    let st = CircleState::new(k, m)?;
    let r = st.root();
    let f = ExpPoly { coeffs: vec![FRAC_1_SQRT_2 * (m as f64 + r * st.rho_m), -FRAC_1_SQRT_2 * r], rate: -1.0 };
    let exact = exact_element(&f, &st, &CircleState::new(k, m - 1)?);
    Ok(MatrixElement::new(exact, FRAC_1_SQRT_2 * derivative_coefficient(m as f64, k)))
}

/// Pair of a raw value and a corrected one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pair {
    pub raw: f64,
    pub corrected: f64,
}

/// `⟨ψ_m, ∂_ρ ψ_m⟩` (raw) and its anti-Hermitian part `⟨ψ_m, (∂_ρ + 1) ψ_m⟩`
/// (corrected). With the measure `e^{2ρ} dρ dφ`, `∂_ρ + 1` is the
/// anti-Hermitian radial derivative, so the raw value is `−1`.
pub fn radial_derivative_expectation(m: i64, k: f64) -> Result<Pair, OracleError> {
    let st = CircleState::new(k, m)?;
    let r = st.root();
    let d = ExpPoly::polynomial(vec![r * st.rho_m, -r]);
    let raw = exact_element(&d, &st, &st);
    let one = exact_element(&ExpPoly::constant(1.0), &st, &st);
    Ok(Pair { raw, corrected: raw + one })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        for k in [1e4, 1e6, 1e8] {
            for m in [-3, 0, 2] {
                let e = circle_matrix_element(&ExpPoly::constant(1.0), 0, m, m, k).unwrap();
                assert!((e.exact - 1.0).abs() < 1e-12, "k={k} m={m}: {}", e.exact);
            }
        }
    }

    #[test]
    fn grading_selects_h() {
        let e = circle_matrix_element(&ExpPoly::exp(1.0), 2, 0, 1, 1e6).unwrap();
        assert_eq!(e.exact, 0.0);
        assert_eq!(e.asymptotic, 0.0);
    }

    #[test]
    fn k_factor_near_one() {
        let p = flemma_params(1e6, 1, 2).unwrap();
        assert!((p.k_factor - 1.0).abs() * 1e9 < 50.0, "{}", p.k_factor - 1.0);
        let same = flemma_params(1e6, 2, 2).unwrap();
        assert!((same.k_factor - 1.0).abs() < 1e-12);
    }

    #[test]
    fn series_parameters_track_exact() {
        let k = 1e8;
        let (p, s) = (flemma_params(k, 1, 2).unwrap(), flemma_series(k, 1, 2));
        assert!((p.c - s.c).abs() < 1.0);
        assert!((p.rho - s.rho).abs() * k.powf(1.5) < 50.0);
    }

    #[test]
    fn exponential_element_closed_form() {
        // ⟨ψ_m', e^{ρ} ψ_m⟩ = K e^{ρ + 1/(4c)} with exact parameters.
        let k = 1e5;
        let p = flemma_params(k, 1, 2).unwrap();
        let e = circle_matrix_element(&ExpPoly::exp(1.0), 1, 1, 2, k).unwrap();
        let want = p.k_factor * (p.rho + 0.25 / p.c).exp();
        assert!((e.exact - want).abs() < 1e-12);
    }

    #[test]
    fn radial_derivative_is_minus_one() {
        let p = radial_derivative_expectation(2, 1e6).unwrap();
        assert!((p.raw + 1.0).abs() < 1e-10);
        assert!(p.corrected.abs() < 1e-10);
    }
}
