use crate::{OperatorMatrix, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormEstimate {
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

const MAX_ITER: usize = 10_000;
const STABLE_STEPS: usize = 5;

/// Largest singular value by power iteration on A^†A from the normalized
/// all-ones vector. Stops once the relative change stays below 1e-12 for five
/// consecutive steps; otherwise returns the last estimate unconverged.
pub fn operator_norm_estimate(a: &OperatorMatrix) -> NormEstimate {
    let n = a.dim();
    if n == 0 || a.max_abs() == 0.0 {
        return NormEstimate { value: 0.0, iterations: 0, converged: true };
    }
    let ah = a.adjoint();
    let mut v = vec![C64::new(1.0 / (n as f64).sqrt(), 0.0); n];
    let mut prev = 0.0f64;
    let mut stable = 0;
    for it in 1..=MAX_ITER {
        let av = a.apply(&v);
        let sigma = norm(&av);
        let w = ah.apply(&av);
        let wn = norm(&w);
        if wn == 0.0 {
            // Start vector is in the kernel; fall back to a coordinate sweep.
            return coordinate_fallback(a);
        }
        v = w.into_iter().map(|z| z / wn).collect();
        if prev > 0.0 && ((sigma - prev) / sigma).abs() < 1e-12 {
            stable += 1;
            if stable >= STABLE_STEPS {
                return NormEstimate { value: sigma, iterations: it, converged: true };
            }
        } else {
            stable = 0;
        }
        prev = sigma;
    }
    NormEstimate { value: norm(&a.apply(&v)), iterations: MAX_ITER, converged: false }
}

fn coordinate_fallback(a: &OperatorMatrix) -> NormEstimate {
    // Pick the column of largest norm as a new start; rerun on a shifted copy
    // is unnecessary because that column cannot be in the kernel of A^†A.
    let n = a.dim();
    let best = (0..n).max_by(|&i, &j| norm(&a.column(i)).total_cmp(&norm(&a.column(j)))).unwrap_or(0);
    let ah = a.adjoint();
    let mut v = vec![C64::new(0.0, 0.0); n];
    v[best] = C64::new(1.0, 0.0);
    let mut prev = 0.0;
    let mut stable = 0;
    for it in 1..=MAX_ITER {
        let av = a.apply(&v);
        let sigma = norm(&av);
        let w = ah.apply(&av);
        let wn = norm(&w);
        v = w.into_iter().map(|z| z / wn).collect();
        if prev > 0.0 && ((sigma - prev) / sigma).abs() < 1e-12 {
            stable += 1;
            if stable >= STABLE_STEPS {
                return NormEstimate { value: sigma, iterations: it, converged: true };
            }
        } else {
            stable = 0;
        }
        prev = sigma;
    }
    NormEstimate { value: norm(&a.apply(&v)), iterations: MAX_ITER, converged: false }
}

pub fn operator_norm(a: &OperatorMatrix) -> f64 {
    operator_norm_estimate(a).value
}

fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_unit_norm() {
        assert!((operator_norm(&OperatorMatrix::identity(4)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn jordan_block() {
        let a = OperatorMatrix::from_fn(2, |i, j| C64::new(if i == 0 && j == 1 { 1.0 } else { 0.0 }, 0.0));
        let est = operator_norm_estimate(&a);
        assert!(est.converged);
        assert!((est.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_picks_largest_modulus() {
        assert!((operator_norm(&OperatorMatrix::diag(&[0.3, -2.0])) - 2.0).abs() < 1e-10);
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(operator_norm(&OperatorMatrix::zeros(3)), 0.0);
    }

    #[test]
    fn start_vector_in_kernel() {
        // [[1,-1],[1,-1]] kills the all-ones vector.
        let a = OperatorMatrix::from_fn(2, |_, j| C64::new(if j == 0 { 1.0 } else { -1.0 }, 0.0));
        assert!((operator_norm(&a) - 2.0).abs() < 1e-12);
    }
}
