use fuzzy_circle::CircleModel;
use fuzzy_sphere::{flat_index, SphereModel};
use harmonics::{a_coef, b_coef};
use linalg_core::{operator_norm, OperatorMatrix, C64};

/// Extra levels kept above Λ in the ambient band.
const MARGIN: usize = 3;

/// `‖(X̄ − X)φ‖` for a unit witness vector `φ` just outside `ℋ_Λ`, the norm of
/// `X̄ − X` compressed to the ambient band, and the closed form of the first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub vector: f64,
    pub band_norm: f64,
    pub formula: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereWitness {
    pub plus: Witness,
    pub minus: Witness,
    pub zero: Witness,
    /// `√(((Λ+2)² + (Λ+1)²)/((2Λ+3)(2Λ+5)))`, the x̄⁰ value as printed.
    pub zero_printed: f64,
}

fn vector_norm(v: &[C64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// `η⁺ − u` on `|m| <= Λ+3`, applied to `u^{Λ+1}`; the closed form is 1.
pub fn nonconvergence_witness_circle(model: &CircleModel) -> Witness {
    let big = model.lambda as i64;
    let amb = big + MARGIN as i64;
    let n = (2 * amb + 1) as usize;
    let at = |m: i64| (m + amb) as usize;
    let mut diff = OperatorMatrix::zeros(n);
    for m in -amb..amb {
        diff[(at(m + 1), at(m))] -= C64::new(1.0, 0.0);
    }
    for m in -big..big {
        diff[(at(m + 1), at(m))] += model.xi_plus[(model.index(m + 1), model.index(m))] * std::f64::consts::SQRT_2;
    }
    let mut phi = vec![C64::new(0.0, 0.0); n];
    phi[at(big + 1)] = C64::new(1.0, 0.0);
    Witness { vector: vector_norm(&diff.apply(&phi)), band_norm: operator_norm(&diff), formula: 1.0 }
}

/// `√((Λ+1)²/((2Λ+1)(2Λ+3)) + (Λ+2)²/((2Λ+3)(2Λ+5)))`.
fn zero_formula(lambda: usize) -> f64 {
    let l = lambda as f64;
    ((l + 1.0).powi(2) / ((2.0 * l + 1.0) * (2.0 * l + 3.0)) + (l + 2.0).powi(2) / ((2.0 * l + 3.0) * (2.0 * l + 5.0)))
        .sqrt()
}

pub fn printed_zero_witness(lambda: usize) -> f64 {
    let l = lambda as f64;
    (((l + 2.0).powi(2) + (l + 1.0).powi(2)) / ((2.0 * l + 3.0) * (2.0 * l + 5.0))).sqrt()
}

/// `x̄ᵃ − tᵃ` on `l <= Λ+3` applied to `Y_{Λ+1}^{a(Λ+1)}`.
pub fn nonconvergence_witness_sphere(model: &SphereModel) -> SphereWitness {
    let big = model.lambda as i32;
    let amb = big + MARGIN as i32;
    let n = ((amb + 1) * (amb + 1)) as usize;
    let l1 = (big + 1) as f64;
    let pm = ((2.0 * l1 + 2.0) / (2.0 * (2.0 * l1 + 3.0))).sqrt();
    let one = |a: i32| {
        let mut diff = OperatorMatrix::zeros(n);
        for l in 0..=amb {
            for m in -l..=l {
                let col = flat_index(l, m);
                if l >= 1 && (m + a).abs() < l {
                    diff[(flat_index(l - 1, m + a), col)] -= C64::new(a_coef(a, l, m), 0.0);
                }
                if l < amb {
                    diff[(flat_index(l + 1, m + a), col)] -= C64::new(b_coef(a, l, m), 0.0);
                }
            }
        }
        let x = model.xa(a);
        for (r, c, z) in x.entries_row_major() {
            diff[(r, c)] += z;
        }
        let mut phi = vec![C64::new(0.0, 0.0); n];
        phi[flat_index(big + 1, a * (big + 1))] = C64::new(1.0, 0.0);
        let formula = if a == 0 { zero_formula(model.lambda) } else { pm };
        Witness { vector: vector_norm(&diff.apply(&phi)), band_norm: operator_norm(&diff), formula }
    };
    SphereWitness { plus: one(1), minus: one(-1), zero: one(0), zero_printed: printed_zero_witness(model.lambda) }
}
