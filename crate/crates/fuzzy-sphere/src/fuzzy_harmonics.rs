use std::f64::consts::PI;

use linalg_core::{commutator, fmt17, OperatorMatrix};

use crate::{SphereError, SphereModel};

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|j| (j as f64).ln()).sum()
}

/// `M_l` with `Y_l^l = M_l (t⁺)^l`, `t⁺ = sin θ e^{iφ}/√2`:
/// `(−1)^l √((2l+1)!/(4π)) / (2^{l/2} l!)`.
pub fn harmonic_top_norm(l: usize) -> f64 {
    let lf = l as f64;
    let ln = 0.5 * (ln_factorial(2 * l + 1) - (4.0 * PI).ln()) - 0.5 * lf * 2f64.ln() - ln_factorial(l);
    if l % 2 == 0 {
        ln.exp()
    } else {
        -ln.exp()
    }
}

/// `R_l^m = M_l √((l+m)! 2^{l−m} / ((2l)! (l−m)!))`.
fn r_norm(l: usize, m: i32) -> f64 {
    let up = (l as i32 + m) as usize;
    let down = (l as i32 - m) as usize;
    let ln = 0.5 * (ln_factorial(up) + down as f64 * 2f64.ln() - ln_factorial(2 * l) - ln_factorial(down));
    harmonic_top_norm(l) * ln.exp()
}

/// Fuzzy spherical harmonics `Ŷ_l^m`, `0 <= l <= l_max`, stored at
/// `l² + l + m`.
#[derive(Debug, Clone)]
pub struct FuzzyHarmonicSet {
    pub l_max: usize,
    pub y: Vec<OperatorMatrix>,
}

impl FuzzyHarmonicSet {
    pub fn get(&self, l: usize, m: i32) -> &OperatorMatrix {
        &self.y[((l * l + l) as i64 + m as i64) as usize]
    }

    /// Rows `l,m,row,col,re,im` for the nonzero entries.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,m,row,col,re,im\n");
        for l in 0..=self.l_max {
            for m in -(l as i32)..=l as i32 {
                for (r, c, z) in self.get(l, m).entries_row_major() {
                    if z.norm() != 0.0 {
                        out.push_str(&format!("{l},{m},{r},{c},{},{}\n", fmt17(z.re), fmt17(z.im)));
                    }
                }
            }
        }
        out
    }
}

pub fn build_fuzzy_harmonics(model: &SphereModel, l_max: usize) -> Result<FuzzyHarmonicSet, SphereError> {
    let max = 2 * model.lambda;
    if l_max > max {
        return Err(SphereError::DegreeTooHigh { l: l_max, max });
    }
    let n = model.dim();
    let mut y = Vec::with_capacity((l_max + 1) * (l_max + 1));
    let mut power = OperatorMatrix::identity(n);
    for l in 0..=l_max {
        // descend from the top weight with ad(L̄₋), then store in m order
        let mut chain = Vec::with_capacity(2 * l + 1);
        let mut cur = power.clone();
        for step in 0..=2 * l {
            let m = l as i32 - step as i32;
            chain.push(cur.scale_real(r_norm(l, m)));
            if step < 2 * l {
                cur = commutator(model.la(-1), &cur).unwrap();
            }
        }
        chain.reverse();
        y.extend(chain);
        power = &power * model.xa(1);
    }
    Ok(FuzzyHarmonicSet { l_max, y })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_sphere;
    use harmonics::LadderTable;

    fn model(big: usize) -> SphereModel {
        build_sphere(big, crate::default_k_schedule(big), &LadderTable::new(big)).unwrap()
    }

    #[test]
    fn top_norm_values() {
        assert!((harmonic_top_norm(0) - 1.0 / (4.0 * PI).sqrt()).abs() < 1e-16);
        // Y_1^1 = -√(3/(8π)) sinθ e^{iφ} = -√(3/(4π)) t⁺
        assert!((harmonic_top_norm(1) + (3.0 / (4.0 * PI)).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn scalar_harmonic() {
        let m = model(2);
        let h = build_fuzzy_harmonics(&m, 4).unwrap();
        let want = OperatorMatrix::identity(m.dim()).scale_real(1.0 / (4.0 * PI).sqrt());
        assert!(h.get(0, 0).max_diff(&want) < 1e-16);
    }

    #[test]
    fn degree_one_is_the_coordinates() {
        // Y_1^0 = √(3/(4π)) t⁰
        let m = model(3);
        let h = build_fuzzy_harmonics(&m, 1).unwrap();
        let s = (3.0 / (4.0 * PI)).sqrt();
        assert!(h.get(1, 0).max_diff(&m.xa(0).scale_real(s)) < 1e-14);
        assert!(h.get(1, 1).max_diff(&m.xa(1).scale_real(-s)) < 1e-14);
        assert!(h.get(1, -1).max_diff(&m.xa(-1).scale_real(s)) < 1e-14);
    }

    #[test]
    fn top_power_survives_next_vanishes() {
        let m = model(2);
        let h = build_fuzzy_harmonics(&m, 4).unwrap();
        assert!(h.get(4, 4).max_abs() > 1e-3);
        assert!(m.xa(1).pow(5).max_abs() < 1e-14);
    }

    #[test]
    fn grading_adjoint_and_trace() {
        let m = model(2);
        let h = build_fuzzy_harmonics(&m, 4).unwrap();
        for l in 0..=4usize {
            for mm in -(l as i32)..=l as i32 {
                let y = h.get(l, mm);
                let g = commutator(m.la(0), y).unwrap().max_diff(&y.scale_real(mm as f64));
                assert!(g < 1e-13, "grade l={l} m={mm}");
                let sign = if mm % 2 == 0 { 1.0 } else { -1.0 };
                let a = y.adjoint().max_diff(&h.get(l, -mm).scale_real(sign));
                assert!(a < 1e-13, "adjoint l={l} m={mm}: {a:e}");
                if l > 0 {
                    assert!(y.trace().norm() < 1e-13, "trace l={l} m={mm}");
                }
            }
        }
        assert_eq!(h.get(2, -1).dim(), 9);
    }

    #[test]
    fn rejects_degree_above_two_lambda() {
        assert!(matches!(build_fuzzy_harmonics(&model(1), 3), Err(SphereError::DegreeTooHigh { l: 3, max: 2 })));
    }
}
