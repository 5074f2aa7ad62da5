use crate::OracleError;

/// Root of the D=2 energy equation for one `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergySolveResult {
    /// `E' = E − V₀`.
    pub e_prime: f64,
    /// `E = E'(m, n) − E'(0, 0)`, so that the ground level is 0.
    pub energy: f64,
    /// `|F(E')|` of the defining equation at the returned root.
    pub residual: f64,
    /// The root lies in `(0, k)`, where `k_m = 2(k − E') > 0`.
    pub physical: bool,
}

/// `E'²/(2(k−E')) + E' − m² − (2n+1)√(2(k−E'))`.
pub fn eneq_residual(k: f64, m: i64, n: u32, e: f64) -> f64 {
    let km = 2.0 * (k - e);
    e * e / km + e - (m * m) as f64 - (2 * n + 1) as f64 * km.sqrt()
}

fn eneq_slope(k: f64, n: u32, e: f64) -> f64 {
    let d = k - e;
    (2.0 * e * d + e * e) / (2.0 * d * d) + 1.0 + (2 * n + 1) as f64 / (2.0 * d).sqrt()
}

/// Bisection on a sign change, finished with guarded Newton steps.
fn bracketed_root(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
) -> Option<f64> {
    let (flo, fhi) = (f(lo), f(hi));
    if !(flo.is_finite() && fhi.is_finite()) || flo.signum() == fhi.signum() {
        return None;
    }
    let rising = fhi > 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) > 0.0) == rising {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..4 {
        let step = f(x) / df(x);
        let next = x - step;
        if !(next >= lo && next <= hi) || step == 0.0 {
            break;
        }
        x = next;
    }
    Some(x)
}

fn solve_prime(k: f64, m: i64, n: u32) -> Result<f64, OracleError> {
    if !(k > 0.0) {
        return Err(OracleError::BadK(k));
    }
    // F is increasing on (0, k): F(0) < 0 and F → +∞ at k.
    let hi = k * (1.0 - 1e-15);
    bracketed_root(|e| eneq_residual(k, m, n, e), |e| eneq_slope(k, n, e), 0.0, hi)
        .ok_or(OracleError::NoRoot { k, m, n })
}

/// `−V₀/√(2k) − V₀²/(2k)^{3/2} − (1 + V₀/k)^{3/2}`.
pub fn v0_residual(k: f64, v0: f64) -> f64 {
    let s = (2.0 * k).sqrt();
    -v0 / s - v0 * v0 / (s * s * s) - (1.0 + v0 / k).powf(1.5)
}

/// Well depth `V₀` that puts the lowest D=2 level at zero energy.
pub fn solve_v0(k: f64) -> Result<f64, OracleError> {
    let s = (2.0 * k).sqrt();
    let lo = -2.0 * s;
    if !(k > 0.0) || 1.0 + lo / k <= 0.0 {
        return Err(OracleError::BadK(k));
    }
    let df = |v: f64| -1.0 / s - 2.0 * v / (s * s * s) - 1.5 * (1.0 + v / k).sqrt() / k;
    bracketed_root(|v| v0_residual(k, v), df, lo, 0.0).ok_or(OracleError::NoRoot { k, m: 0, n: 0 })
}

/// Level `E_{n,m}` of the D=2 model, measured from the ground level.
pub fn solve_em(k: f64, m: i64, n: u32) -> Result<EnergySolveResult, OracleError> {
    let v0 = solve_v0(k)?;
    let e_prime = solve_prime(k, m, n)?;
    Ok(EnergySolveResult {
        e_prime,
        energy: e_prime + v0,
        residual: eneq_residual(k, m, n, e_prime).abs(),
        physical: e_prime > 0.0 && e_prime < k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v0_series_and_residual() {
        let k = 1e6;
        let v0 = solve_v0(k).unwrap();
        let s = (2.0 * k).sqrt();
        let third = v0 + s - 2.0;
        assert!((third / (-3.5 / s) - 1.0).abs() < 0.2, "{third}");
        assert!(v0_residual(k, v0).abs() <= 1e-10 * k.sqrt());
    }

    #[test]
    fn v0_tends_to_two() {
        let d: Vec<f64> = [1e4, 1e6, 1e8].iter().map(|&k| solve_v0(k).unwrap() + (2.0 * k).sqrt()).collect();
        assert!((d[2] - 2.0).abs() < (d[1] - 2.0).abs());
        assert!((d[1] - 2.0).abs() < (d[0] - 2.0).abs());
        assert!((d[2] - 2.0).abs() < 1e-3);
    }

    #[test]
    fn v0_rejects_small_k() {
        assert!(solve_v0(4.0).is_err());
        assert!(solve_v0(-1.0).is_err());
    }

    #[test]
    fn ground_level_is_zero() {
        let r = solve_em(1e8, 0, 0).unwrap();
        assert!(r.energy.abs() < 1e-6);
        assert!(r.physical);
        assert!(r.residual <= 1e-10 * 1e8);
    }

    #[test]
    fn first_excited_radial_level() {
        // Expanding the energy equation gives E_{n,m} = m² + 2n√(2k) − 8n(n+1) + O(1/√k).
        for k in [1e6, 1e8] {
            let s = (2.0f64 * k).sqrt();
            let e = solve_em(k, 0, 1).unwrap().energy;
            assert!((e - 2.0 * s + 16.0).abs() * k.sqrt() < 100.0, "{}", e - 2.0 * s + 16.0);
        }
        let e = solve_em(1e8, 0, 2).unwrap().energy;
        assert!((e - 4.0 * (2e8f64).sqrt() + 48.0).abs() < 0.05);
    }

    #[test]
    fn levels_increase_with_m() {
        let e: Vec<f64> = (0..5).map(|m| solve_em(1e6, m, 0).unwrap().energy).collect();
        assert!(e.windows(2).all(|w| w[0] < w[1]));
        assert!(solve_em(0.0, 1, 0).is_err());
    }
}
