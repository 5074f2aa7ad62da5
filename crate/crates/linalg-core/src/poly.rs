use crate::{hermitian_eig, OperatorMatrix, C64};

/// Horner evaluation of `sum_i coeffs[i] A^i`.
pub fn matrix_polynomial(a: &OperatorMatrix, coeffs: &[f64]) -> OperatorMatrix {
    let n = a.dim();
    let mut acc = OperatorMatrix::zeros(n);
    for &c in coeffs.iter().rev() {
        acc = &acc * a;
        for i in 0..n {
            acc[(i, i)] += C64::new(c, 0.0);
        }
    }
    acc
}

/// Spectral projector onto the eigenvalue `target` of a diagonalizable `a`
/// whose spectrum is `spectrum`, via the Lagrange basis polynomial in product
/// form.
pub fn lagrange_projector(a: &OperatorMatrix, spectrum: &[f64], target: f64) -> OperatorMatrix {
    let n = a.dim();
    let mut p = OperatorMatrix::identity(n);
    for &mu in spectrum {
        if mu == target {
            continue;
        }
        let mut factor = a.clone();
        for i in 0..n {
            factor[(i, i)] -= C64::new(mu, 0.0);
        }
        p = &p * &factor.scale_real(1.0 / (target - mu));
    }
    p
}

/// Dimension of the span of `vectors`, from the Gram matrix spectrum with a
/// cutoff `rel_tol` relative to the largest eigenvalue.
pub fn gram_rank(vectors: &[Vec<C64>], rel_tol: f64) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let g = OperatorMatrix::from_fn(vectors.len(), |i, j| {
        vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a.conj() * b).sum()
    });
    let eig = hermitian_eig(&g).expect("Gram matrix is Hermitian");
    let top = eig.eigenvalues.last().copied().unwrap_or(0.0);
    if top <= 0.0 {
        return 0;
    }
    // Gram eigenvalues are squared singular values.
    let cut = (rel_tol * top.sqrt()).powi(2);
    eig.eigenvalues.iter().filter(|&&l| l > cut).count()
}

/// Dimension of the span of all words of length `<= max_len` in `gens`,
/// the empty word included. Each layer is pruned to an independent subset
/// before extending, and the final count is a [`gram_rank`] at `rel_tol`.
pub fn word_span_dimension(gens: &[&OperatorMatrix], max_len: usize, rel_tol: f64) -> usize {
    let Some(first) = gens.first() else { return 0 };
    let mut layer = vec![OperatorMatrix::identity(first.dim())];
    let mut kept: Vec<Vec<C64>> = Vec::new();
    let mut basis: Vec<Vec<C64>> = Vec::new();
    absorb(&mut basis, &mut kept, &layer);
    for _ in 0..max_len {
        let next: Vec<OperatorMatrix> = layer.iter().flat_map(|w| gens.iter().map(move |g| w * *g)).collect();
        layer = absorb(&mut basis, &mut kept, &next);
        if layer.is_empty() {
            break;
        }
    }
    gram_rank(&kept, rel_tol)
}

/// Adds the words of `words` that are independent of `basis` (modified
/// Gram–Schmidt) and returns them.
fn absorb(basis: &mut Vec<Vec<C64>>, kept: &mut Vec<Vec<C64>>, words: &[OperatorMatrix]) -> Vec<OperatorMatrix> {
    let mut fresh = Vec::new();
    for w in words {
        let mut v = w.as_slice().to_vec();
        let scale = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if scale == 0.0 {
            continue;
        }
        for _ in 0..2 {
            for b in basis.iter() {
                let dot: C64 = b.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= dot * bi;
                }
            }
        }
        let rest = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if rest > 1e-9 * scale {
            basis.push(v.into_iter().map(|z| z / rest).collect());
            kept.push(w.as_slice().to_vec());
            fresh.push(w.clone());
        }
    }
    fresh
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_linear() {
        let a = OperatorMatrix::diag(&[1.0, -3.0, 2.5]);
        assert_eq!(matrix_polynomial(&a, &[1.0]), OperatorMatrix::identity(3));
        assert_eq!(matrix_polynomial(&a, &[0.0, 1.0]), a);
    }

    #[test]
    fn lagrange_selects_eigenvalue() {
        let a = OperatorMatrix::diag(&[-1.0, 0.0, 1.0]);
        // l(x) = x(x+1)/2
        let expanded = matrix_polynomial(&a, &[0.0, 0.5, 0.5]);
        assert_eq!(expanded, OperatorMatrix::diag(&[0.0, 0.0, 1.0]));
        let product = lagrange_projector(&a, &[-1.0, 0.0, 1.0], 1.0);
        assert_eq!(product, OperatorMatrix::diag(&[0.0, 0.0, 1.0]));
    }

    #[test]
    fn rank_of_dependent_set() {
        let one = C64::new(1.0, 0.0);
        let z = C64::new(0.0, 0.0);
        let v = vec![vec![one, z, z], vec![z, one, z], vec![one, one, z]];
        assert_eq!(gram_rank(&v, 1e-8), 2);
    }

    #[test]
    fn words_in_a_single_projector() {
        let p = OperatorMatrix::diag(&[1.0, 0.0]);
        assert_eq!(word_span_dimension(&[&p], 5, 1e-8), 2);
        let e = OperatorMatrix::from_fn(2, |i, j| C64::new(if i == 0 && j == 1 { 1.0 } else { 0.0 }, 0.0));
        assert_eq!(word_span_dimension(&[&e, &e.adjoint()], 2, 1e-8), 4);
    }
}
