use std::f64::consts::PI;

use linalg_core::C64;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Complex log-Gamma, Lanczos approximation (g = 7, 9 terms) with the
/// reflection formula for `Re z < 1/2`. The imaginary part is only defined
/// modulo 2π.
pub fn ln_gamma(z: C64) -> C64 {
    if z.re < 0.5 {
        let pi = C64::new(PI, 0.0);
        return pi.ln() - (pi * z).sin().ln() - ln_gamma(C64::new(1.0, 0.0) - z);
    }
    let z = z - 1.0;
    let mut x = C64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        let mut f = 1.0f64;
        for n in 1..20 {
            f *= n as f64;
            let g = ln_gamma(C64::new(n as f64 + 1.0, 0.0));
            assert!((g.re - f.ln()).abs() < 1e-13 * f.ln().max(1.0), "n={n}");
        }
        assert!((ln_gamma(C64::new(0.5, 0.0)).re - PI.sqrt().ln()).abs() < 1e-14);
    }

    #[test]
    fn modulus_on_imaginary_lines() {
        // |Γ(1+iy)|² = πy/sinh(πy),  |Γ(1/2+iy)|² = π/cosh(πy)
        for y in [0.3, 1.0, 2.5, 7.0, 20.0] {
            let a = 2.0 * ln_gamma(C64::new(1.0, y)).re;
            let b = 2.0 * ln_gamma(C64::new(0.5, y)).re;
            let a_ref = (PI * y).ln() - (PI * y).sinh().ln();
            let b_ref = PI.ln() - (PI * y).cosh().ln();
            assert!((a - a_ref).abs() < 1e-12, "y={y}");
            assert!((b - b_ref).abs() < 1e-12, "y={y}");
        }
    }

    #[test]
    fn reflection_branch() {
        // Γ(-1/2) = -2√π
        let g = ln_gamma(C64::new(-0.5, 0.0));
        assert!((g.re - (2.0 * PI.sqrt()).ln()).abs() < 1e-13);
    }
}
