use std::f64::consts::{FRAC_1_SQRT_2, PI};

use linalg_core::C64;

use crate::HarmonicsError;

/// Fully normalized associated Legendre value `P̄_l^m(cos θ)` for `m >= 0`,
/// including the Condon–Shortley phase, so that
/// `Y_l^m = P̄_l^m e^{imφ}`.
fn normalized_legendre(l: i32, m: i32, theta: f64) -> f64 {
    let (x, s) = (theta.cos(), theta.sin());
    let mut pmm = 1.0 / (4.0 * PI).sqrt();
    for j in 1..=m {
        let jf = j as f64;
        pmm *= -((2.0 * jf + 1.0) / (2.0 * jf)).sqrt() * s;
    }
    if l == m {
        return pmm;
    }
    let mf = m as f64;
    let mut p_prev = pmm;
    let mut p = (2.0 * mf + 3.0).sqrt() * x * pmm;
    for j in m + 2..=l {
        let jf = j as f64;
        let a = ((4.0 * jf * jf - 1.0) / (jf * jf - mf * mf)).sqrt();
        let jm = jf - 1.0;
        let a_prev = ((4.0 * jm * jm - 1.0) / (jm * jm - mf * mf)).sqrt();
        let next = a * (x * p - p_prev / a_prev);
        p_prev = p;
        p = next;
    }
    p
}

/// Orthonormal spherical harmonic with Condon–Shortley phase.
pub fn eval_ylm(l: i32, m: i32, theta: f64, phi: f64) -> Result<C64, HarmonicsError> {
    if l < 0 || m.abs() > l {
        return Err(HarmonicsError::BadOrder { l, m });
    }
    let p = normalized_legendre(l, m.abs(), theta);
    let y = C64::from_polar(p, m.abs() as f64 * phi);
    Ok(if m >= 0 {
        y
    } else if m % 2 == 0 {
        y.conj()
    } else {
        -y.conj()
    })
}

/// Spherical components of the unit vector: `a = 0` is cos θ,
/// `a = ±1` is sin θ e^{±iφ}/√2.
pub fn t_component(a: i32, theta: f64, phi: f64) -> C64 {
    match a {
        0 => C64::new(theta.cos(), 0.0),
        1 => C64::from_polar(FRAC_1_SQRT_2 * theta.sin(), phi),
        -1 => C64::from_polar(FRAC_1_SQRT_2 * theta.sin(), -phi),
        _ => C64::new(0.0, 0.0),
    }
}
