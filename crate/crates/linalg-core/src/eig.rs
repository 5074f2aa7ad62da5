use crate::{LinalgError, OperatorMatrix, C64};

/// Eigenpairs of a Hermitian matrix: ascending eigenvalues, eigenvectors as
/// columns of a unitary matrix.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: OperatorMatrix,
    pub sweeps: usize,
}

impl SpectralDecomposition {
    /// V diag(λ) V^†.
    pub fn reconstruct(&self) -> OperatorMatrix {
        let v = &self.eigenvectors;
        &(v * &OperatorMatrix::diag(&self.eigenvalues)) * &v.adjoint()
    }

    /// Eigenvalues grouped within `tol` as (value, multiplicity).
    pub fn grouped(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &l in &self.eigenvalues {
            match out.last_mut() {
                Some((v, n)) if (l - *v).abs() <= tol => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization.
///
/// Rotations use the phase trick: the (p,q) pair is first made real by a
/// diagonal unitary, then annihilated by an ordinary real rotation. Sweeps stop
/// once the off-diagonal Frobenius norm drops below `1e-13 * ||A||_F`.
pub fn hermitian_eig(a: &OperatorMatrix) -> Result<SpectralDecomposition, LinalgError> {
    let n = a.dim();
    let defect = a.hermitian_defect();
    if defect > 1e-12 * (n.max(1) as f64) * a.max_abs().max(1.0) {
        return Err(LinalgError::NotHermitian(defect));
    }
    let mut m = a.clone();
    // Symmetrize so the rotations see an exactly Hermitian matrix.
    for i in 0..n {
        m[(i, i)] = C64::new(m[(i, i)].re, 0.0);
        for j in i + 1..n {
            let avg = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
            m[(i, j)] = avg;
            m[(j, i)] = avg.conj();
        }
    }
    let mut v = OperatorMatrix::identity(n);
    let scale = m.frobenius_norm();
    let threshold = 1e-13 * scale;
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS && off_norm(&m) > threshold {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[(i, i)].re).collect();
    let mut vecs = OperatorMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        let column = v.column(src);
        let pivot = column.iter().copied().find(|z| z.norm() > 1e-12).unwrap_or(C64::new(1.0, 0.0));
        let phase = pivot.conj() / pivot.norm();
        for (row, z) in column.into_iter().enumerate() {
            vecs[(row, col)] = z * phase;
        }
    }
    Ok(SpectralDecomposition { eigenvalues, eigenvectors: vecs, sweeps })
}

fn off_norm(m: &OperatorMatrix) -> f64 {
    let n = m.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate(m: &mut OperatorMatrix, v: &mut OperatorMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let tau = (aqq - app) / (2.0 * g);
    let t = if tau >= 0.0 { 1.0 / (tau + (1.0 + tau * tau).sqrt()) } else { -1.0 / (-tau + (1.0 + tau * tau).sqrt()) };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let e = apq / g;
    // U restricted to (p,q): [[c, s], [-s e*, c e*]]
    let upp = C64::new(c, 0.0);
    let upq = C64::new(s, 0.0);
    let uqp = -e.conj() * s;
    let uqq = e.conj() * c;
    let n = m.dim();
    for k in 0..n {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = mkp * upp + mkq * uqp;
        m[(k, q)] = mkp * upq + mkq * uqq;
    }
    for k in 0..n {
        let mpk = m[(p, k)];
        let mqk = m[(q, k)];
        m[(p, k)] = upp.conj() * mpk + uqp.conj() * mqk;
        m[(q, k)] = upq.conj() * mpk + uqq.conj() * mqk;
    }
    m[(p, q)] = C64::new(0.0, 0.0);
    m[(q, p)] = C64::new(0.0, 0.0);
    m[(p, p)] = C64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = C64::new(m[(q, q)].re, 0.0);
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * upp + vkq * uqp;
        v[(k, q)] = vkp * upq + vkq * uqq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input_sorted() {
        let d = hermitian_eig(&OperatorMatrix::diag(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(d.eigenvalues, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn swap_matrix() {
        let a = OperatorMatrix::from_fn(2, |i, j| C64::new(if i != j { 1.0 } else { 0.0 }, 0.0));
        let d = hermitian_eig(&a).unwrap();
        assert!((d.eigenvalues[0] + 1.0).abs() < 1e-15);
        assert!((d.eigenvalues[1] - 1.0).abs() < 1e-15);
        for col in 0..2 {
            let first = d.eigenvectors[(0, col)];
            assert!(first.re > 0.0 && first.im == 0.0);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = OperatorMatrix::from_fn(2, |i, j| C64::new(if i < j { 1.0 } else { 0.0 }, 0.0));
        assert!(matches!(hermitian_eig(&a), Err(LinalgError::NotHermitian(_))));
    }

    #[test]
    fn complex_hermitian_reconstructs() {
        let a = OperatorMatrix::from_fn(5, |i, j| {
            let (x, y) = (i as f64, j as f64);
            if i == j {
                C64::new(x * x - 2.0, 0.0)
            } else if i < j {
                C64::new(0.3 * x - y, 0.7 * (x + y))
            } else {
                C64::new(0.3 * y - x, -0.7 * (x + y))
            }
        });
        let d = hermitian_eig(&a).unwrap();
        assert!(d.reconstruct().max_diff(&a) < 1e-12 * a.frobenius_norm());
        let v = &d.eigenvectors;
        assert!((&v.adjoint() * v).max_diff(&OperatorMatrix::identity(5)) < 1e-13);
        assert!(d.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn grouping_counts_multiplicities() {
        let d = hermitian_eig(&OperatorMatrix::diag(&[2.0, 0.0, 2.0, 6.0, 2.0])).unwrap();
        assert_eq!(d.grouped(1e-9), vec![(0.0, 1), (2.0, 3), (6.0, 1)]);
    }
}
