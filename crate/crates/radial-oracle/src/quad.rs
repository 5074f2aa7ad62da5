use std::sync::OnceLock;

use harmonics::gauss_legendre;

const ORDER: usize = 20;
const MAX_DEPTH: u32 = 30;

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(ORDER))
}

/// Gauss–Legendre value of the panel and of `|f|` over it.
fn panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let (x, w) = rule();
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    let (mut v, mut abs) = (0.0, 0.0);
    for (xi, wi) in x.iter().zip(w) {
        let y = f(mid + half * xi);
        v += wi * y;
        abs += wi * y.abs();
    }
    (v * half, abs * half.abs())
}

fn refine<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64, abs_tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let ((left, la), (right, ra)) = (panel(f, a, m), panel(f, m, b));
    let diff = (left + right - whole).abs();
    // below the rounding floor further splitting cannot help
    if depth >= MAX_DEPTH || diff <= abs_tol || diff <= 256.0 * f64::EPSILON * (la + ra) {
        return left + right;
    }
    refine(f, a, m, left, 0.5 * abs_tol, depth + 1) + refine(f, m, b, right, 0.5 * abs_tol, depth + 1)
}

/// Adaptive 20-point Gauss–Legendre on `[a, b]`. The error target is
/// `rel_tol` times the integral of `|f|`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> f64 {
    const START: usize = 16;
    let h = (b - a) / START as f64;
    let pieces: Vec<(f64, f64)> = (0..START).map(|i| panel(&f, a + i as f64 * h, a + (i + 1) as f64 * h)).collect();
    let scale = pieces.iter().map(|p| p.1).sum::<f64>().max(f64::MIN_POSITIVE);
    let tol = rel_tol * scale / START as f64;
    pieces
        .iter()
        .enumerate()
        .map(|(i, &(p, _))| refine(&f, a + i as f64 * h, a + (i + 1) as f64 * h, p, tol, 0))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_transcendental() {
        assert!((integrate(|x| x * x, 0.0, 3.0, 1e-14) - 9.0).abs() < 1e-13);
        assert!((integrate(f64::sin, 0.0, std::f64::consts::PI, 1e-14) - 2.0).abs() < 1e-14);
        let narrow = integrate(|x: f64| (-1e6 * (x - 0.3) * (x - 0.3)).exp(), -1.0, 1.0, 1e-13);
        assert!((narrow - (std::f64::consts::PI / 1e6).sqrt()).abs() < 1e-13 * narrow);
    }

    #[test]
    fn cancelling_integrand_terminates() {
        let v = integrate(|x: f64| x * (-x * x).exp() + 1e-9, -30.0, 30.0, 1e-15);
        assert!((v - 6e-8).abs() < 1e-13);
    }
}
