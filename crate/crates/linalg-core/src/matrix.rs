use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use crate::{LinalgError, C64};

/// Square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl OperatorMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![C64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn from_row_major(dim: usize, data: Vec<C64>) -> Result<Self, LinalgError> {
        if data.len() != dim * dim {
            return Err(LinalgError::BadLength { expected: dim * dim, got: data.len() });
        }
        Ok(Self { dim, data })
    }

    /// Real diagonal matrix.
    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        m
    }

    pub fn diag_complex(values: &[C64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Max-entry distance between `self` and `other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Hermitian up to `1e-12 * dim` in the max-entry sense.
    pub fn is_hermitian(&self) -> bool {
        self.hermitian_defect() <= 1e-12 * self.dim.max(1) as f64
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        (0..self.dim)
            .map(|i| {
                let row = &self.data[i * self.dim..(i + 1) * self.dim];
                row.iter().zip(v).map(|(a, b)| a * b).sum()
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::identity(self.dim);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// exp(i t H) for Hermitian `H`, through its eigendecomposition.
    pub fn exp_i_hermitian(&self, t: f64) -> Result<Self, LinalgError> {
        let eig = crate::hermitian_eig(self)?;
        let phases: Vec<C64> = eig.eigenvalues.iter().map(|&l| C64::from_polar(1.0, t * l)).collect();
        let v = &eig.eigenvectors;
        Ok(&(v * &Self::diag_complex(&phases)) * &v.adjoint())
    }

    /// U A U^† for unitary `u`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        &(u * self) * &u.adjoint()
    }

    /// Nonzero entries as `row,col,re,im` lines with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,col,re,im\n");
        for (i, j, z) in self.entries_row_major() {
            if z.re != 0.0 || z.im != 0.0 {
                out.push_str(&format!("{},{},{},{}\n", i, j, fmt17(z.re), fmt17(z.im)));
            }
        }
        out
    }

    pub fn entries_row_major(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        self.data.iter().enumerate().map(move |(k, &z)| (k / self.dim, k % self.dim, z))
    }
}

impl Index<(usize, usize)> for OperatorMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for OperatorMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

impl fmt::Debug for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OperatorMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| {
                    let z = self[(i, j)];
                    format!("{:+.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Scientific notation with 17 significant digits (round-trips any f64).
pub fn fmt17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{:.16e}", x)
}

/// Exact product `A B`.
pub fn matmul(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix, LinalgError> {
    if a.dim != b.dim {
        return Err(LinalgError::DimensionMismatch(a.dim, b.dim));
    }
    let n = a.dim;
    let mut out = OperatorMatrix::zeros(n);
    for i in 0..n {
        let arow = &a.data[i * n..(i + 1) * n];
        let orow = &mut out.data[i * n..(i + 1) * n];
        for (k, &aik) in arow.iter().enumerate() {
            if aik.re == 0.0 && aik.im == 0.0 {
                continue;
            }
            let brow = &b.data[k * n..(k + 1) * n];
            for (o, &bkj) in orow.iter_mut().zip(brow) {
                *o += aik * bkj;
            }
        }
    }
    Ok(out)
}

/// `AB - BA`.
pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix, LinalgError> {
    Ok(&matmul(a, b)? - &matmul(b, a)?)
}

/// `AB + BA`.
pub fn anticommutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix, LinalgError> {
    Ok(&matmul(a, b)? + &matmul(b, a)?)
}

impl Mul for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        matmul(self, rhs).expect("dimension mismatch in product")
    }
}

impl Mul<C64> for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: C64) -> OperatorMatrix {
        self.scale(rhs)
    }
}

impl Mul<f64> for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: f64) -> OperatorMatrix {
        self.scale_real(rhs)
    }
}

impl Add for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn neg(self) -> OperatorMatrix {
        self.scale_real(-1.0)
    }
}

impl AddAssign<&OperatorMatrix> for OperatorMatrix {
    fn add_assign(&mut self, rhs: &OperatorMatrix) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in sum");
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
    }
}

impl SubAssign<&OperatorMatrix> for OperatorMatrix {
    fn sub_assign(&mut self, rhs: &OperatorMatrix) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in difference");
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::I;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn identity_is_neutral() {
        let a = OperatorMatrix::from_fn(3, |i, j| c(i as f64, j as f64 - 1.0));
        assert_eq!(&OperatorMatrix::identity(3) * &a, a);
        assert_eq!(&a * &OperatorMatrix::identity(3), a);
    }

    #[test]
    fn rank_one_product() {
        let a = OperatorMatrix::from_row_major(2, vec![c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]).unwrap();
        let b = a.transpose();
        assert_eq!(&a * &b, OperatorMatrix::diag(&[1.0, 0.0]));
    }

    #[test]
    fn mismatched_product_is_rejected() {
        let err = matmul(&OperatorMatrix::zeros(2), &OperatorMatrix::zeros(3)).unwrap_err();
        assert_eq!(err, LinalgError::DimensionMismatch(2, 3));
        assert!(commutator(&OperatorMatrix::zeros(2), &OperatorMatrix::zeros(3)).is_err());
    }

    #[test]
    fn pauli_commutator() {
        let sx = OperatorMatrix::from_row_major(2, vec![c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]).unwrap();
        let sy = OperatorMatrix::from_row_major(2, vec![c(0., 0.), -I, I, c(0., 0.)]).unwrap();
        let expected = OperatorMatrix::diag(&[1.0, -1.0]).scale(c(0.0, 2.0));
        assert_eq!(commutator(&sx, &sy).unwrap(), expected);
    }

    #[test]
    fn trivial_commutators_vanish() {
        let a = OperatorMatrix::from_fn(4, |i, j| c((i * j) as f64, i as f64 - j as f64));
        assert_eq!(commutator(&a, &a).unwrap().max_abs(), 0.0);
        assert_eq!(commutator(&OperatorMatrix::identity(4), &a).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn adjoint_is_involution() {
        let a = OperatorMatrix::from_fn(3, |i, j| c(i as f64 + 0.5, 2.0 * j as f64 - 1.0));
        assert_eq!(a.adjoint().adjoint(), a);
        assert!(!a.is_hermitian());
        assert!((&a + &a.adjoint()).is_hermitian());
    }

    #[test]
    fn csv_lists_nonzero_entries() {
        let csv = OperatorMatrix::diag(&[1.0, 0.0]).to_csv();
        assert_eq!(csv, "row,col,re,im\n0,0,1.0000000000000000e0,0\n");
    }

    #[test]
    fn exp_of_diagonal() {
        let h = OperatorMatrix::diag(&[0.0, 1.0, -2.0]);
        let u = h.exp_i_hermitian(0.3).unwrap();
        let expected = OperatorMatrix::diag_complex(&[c(1.0, 0.0), C64::from_polar(1.0, 0.3), C64::from_polar(1.0, -0.6)]);
        assert!(u.max_diff(&expected) < 1e-14);
    }
}
