//! The fixed test functions used by sweeps and acceptance runs.

use std::f64::consts::PI;

use linalg_core::C64;

use crate::{TruncatedFourier, TruncatedSphFn};

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Multipliers on the circle: `u`, `2cos φ`, a complex trigonometric
/// polynomial, Gaussian coefficients and the truncated step `1_{[0,π)}`.
pub fn circle_f_corpus() -> Vec<(&'static str, TruncatedFourier)> {
    let trig = TruncatedFourier::from_fn(3, |m| match m {
        0 => re(1.0),
        2 => re(0.5),
        -3 => C64::new(0.0, -0.25),
        _ => re(0.0),
    });
    let step = TruncatedFourier::from_fn(25, |h| {
        if h == 0 {
            re(0.5)
        } else if h % 2 == 0 {
            re(0.0)
        } else {
            C64::new(0.0, -1.0 / (PI * h as f64))
        }
    });
    vec![
        ("u", TruncatedFourier::monomial(1)),
        ("2cos", TruncatedFourier::from_fn(1, |m| if m == 0 { re(0.0) } else { re(1.0) })),
        ("trig", trig),
        ("gauss", TruncatedFourier::from_fn(10, |h| re((-(h * h) as f64 / 4.0).exp()))),
        ("step", step),
    ]
}

/// Unit vectors with fast (`e^{-m²/8}`) and slow (`(1+|m|)^{-2}`) decay.
pub fn circle_phi_corpus() -> Vec<(&'static str, TruncatedFourier)> {
    let gauss = TruncatedFourier::from_fn(24, |m| re((-(m * m) as f64 / 8.0).exp()));
    let slow = TruncatedFourier::from_fn(40, |m| re(1.0 / (1.0 + m.abs() as f64).powi(2)));
    vec![("gauss", gauss.normalized().expect("nonzero")), ("slow", slow.normalized().expect("nonzero"))]
}

/// `∫_0^1 P_l(x) dx`.
fn legendre_upper_half(l: usize) -> f64 {
    // P_n(0) = (-1)^{n/2} (n-1)!!/n!! for even n
    let p0 = |n: usize| -> f64 {
        if n % 2 == 1 {
            return 0.0;
        }
        let mut v = 1.0;
        for j in (2..=n).step_by(2) {
            v *= -((j - 1) as f64) / j as f64;
        }
        v
    };
    if l == 0 {
        1.0
    } else {
        (p0(l - 1) - p0(l + 1)) / (2 * l + 1) as f64
    }
}

/// Multipliers on the sphere: `t⁰`, a real function with Gaussian
/// coefficients, and the truncated northern-hemisphere indicator.
pub fn sphere_f_corpus() -> Vec<(&'static str, TruncatedSphFn)> {
    let gauss = TruncatedSphFn::from_fn(4, |l, m| {
        let c = (-((l * l) as f64 + (m * m) as f64) / 4.0).exp();
        if m >= 0 || m % 2 == 0 {
            re(c)
        } else {
            re(-c)
        }
    });
    let cap = TruncatedSphFn::from_fn(9, |l, m| {
        if m != 0 {
            return re(0.0);
        }
        re(2.0 * PI * ((2 * l + 1) as f64 / (4.0 * PI)).sqrt() * legendre_upper_half(l))
    });
    vec![("t0", TruncatedSphFn::t_component(0)), ("gauss", gauss), ("cap", cap)]
}

/// `Y_0^0`, a spread of low degrees, and a vector reaching degree 6.
pub fn sphere_phi_corpus() -> Vec<(&'static str, TruncatedSphFn)> {
    let spread = TruncatedSphFn::from_fn(3, |l, m| C64::new((-(l as f64)).exp(), 0.1 * m as f64));
    let wide = TruncatedSphFn::from_fn(6, |l, m| re(1.0 / ((1 + l) * (1 + l)) as f64 * if m == 0 { 1.0 } else { 0.5 }));
    vec![
        ("y00", TruncatedSphFn::harmonic(0, 0)),
        ("spread", spread.normalized().expect("nonzero")),
        ("wide", wide.normalized().expect("nonzero")),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_coefficients_reproduce_the_step() {
        let (_, step) = circle_f_corpus().into_iter().find(|(n, _)| *n == "step").unwrap();
        assert!((step.eval(PI / 2.0).re - 1.0).abs() < 0.03);
        assert!(step.eval(3.0 * PI / 2.0).re.abs() < 0.03);
        assert!(step.is_real(1e-15));
    }

    #[test]
    fn cap_coefficients_reproduce_the_cap() {
        let (_, cap) = sphere_f_corpus().into_iter().find(|(n, _)| *n == "cap").unwrap();
        // the mean value is 1/2
        assert!((cap.get(0, 0).re - 0.5 * (4.0 * PI).sqrt()).abs() < 1e-14);
        assert!((cap.eval(0.3, 0.0).re - 1.0).abs() < 0.1);
        assert!(cap.eval(PI - 0.3, 0.0).re.abs() < 0.1);
        assert!((cap.eval(PI / 2.0, 0.0).re - 0.5).abs() < 1e-12);
    }

    #[test]
    fn corpus_functions_are_real_where_intended() {
        for (name, f) in sphere_f_corpus() {
            assert!(f.is_real(1e-15), "{name}");
        }
        for (name, phi) in circle_phi_corpus() {
            assert!((phi.norm() - 1.0).abs() < 1e-14, "{name}");
        }
        for (name, phi) in sphere_phi_corpus() {
            assert!((phi.norm() - 1.0).abs() < 1e-14, "{name}");
        }
    }
}
