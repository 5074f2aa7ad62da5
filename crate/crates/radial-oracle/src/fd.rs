use crate::{solve_v0, OracleError};

/// Points per oscillator length below which a grid is rejected.
const MIN_POINTS_PER_LENGTH: f64 = 40.0;
/// Distance from the well centre, in oscillator lengths, each end must reach.
const MIN_REACH: f64 = 9.0;

/// Uniform grid in `ρ = ln r` (D=2) or in `r` (D=3), ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub n_points: usize,
}

/// Oscillator length `(2k)^{−1/4}` of the well `2k(r−1)²`.
fn length(k: f64) -> f64 {
    (2.0 * k).powf(-0.25)
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n_points: usize) -> Result<Self, OracleError> {
        if n_points < 3 || !(r_max > r_min) {
            return Err(OracleError::BadGrid(format!("[{r_min}, {r_max}] with {n_points} points")));
        }
        Ok(Self { r_min, r_max, n_points })
    }

    /// Grid spanning 12 oscillator lengths either side of the well. In D=3
    /// the lower end is kept at `r >= 0.1`.
    pub fn centered(d: u32, k: f64, points_per_length: f64) -> Result<Self, OracleError> {
        let w = 12.0 * length(k);
        let (lo, hi) = match d {
            2 => (-w, w),
            3 => ((1.0 - w).max(0.1), 1.0 + w),
            _ => return Err(OracleError::BadDimension(d)),
        };
        let n = ((hi - lo) / length(k) * points_per_length).ceil() as usize + 1;
        Self::new(lo, hi, n)
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n_points - 1) as f64
    }

    fn refined(&self) -> Self {
        Self { n_points: 2 * self.n_points - 1, ..*self }
    }
}

/// Symmetric tridiagonal matrix: diagonal `d`, off-diagonal `e`.
struct Tridiagonal {
    d: Vec<f64>,
    e: Vec<f64>,
}

impl Tridiagonal {
    /// Number of eigenvalues below `x` (Sturm sequence).
    fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.d.len() {
            let off = if i == 0 { 0.0 } else { self.e[i - 1] * self.e[i - 1] / q };
            q = self.d[i] - x - off;
            if q == 0.0 {
                q = -f64::EPSILON * (self.d[i].abs() + x.abs()).max(1.0);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `j`-th smallest eigenvalue by bisection.
    fn eigenvalue(&self, j: usize) -> f64 {
        let n = self.d.len();
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..n {
            let r = if i > 0 { self.e[i - 1].abs() } else { 0.0 } + if i + 1 < n { self.e[i].abs() } else { 0.0 };
            lo = lo.min(self.d[i] - r);
            hi = hi.max(self.d[i] + r);
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

fn assemble(d: u32, k: f64, angular: i64, grid: &RadialGrid, v0: f64) -> Tridiagonal {
    let h = grid.spacing();
    let inner = grid.n_points - 2;
    let xs: Vec<f64> = (1..=inner).map(|i| grid.r_min + i as f64 * h).collect();
    let kin = 1.0 / (h * h);
    let a = angular as f64;
    match d {
        2 => {
            // −f'' + m² f + e^{2ρ} V(e^ρ) f = E e^{2ρ} f, symmetrized by e^{−ρ}.
            let diag = xs
                .iter()
                .map(|&rho| {
                    let r = rho.exp();
                    (2.0 * kin + a * a) / (r * r) + v0 + 2.0 * k * (r - 1.0) * (r - 1.0)
                })
                .collect();
            let off = xs.windows(2).map(|w| -kin * (-(w[0] + w[1])).exp()).collect();
            Tridiagonal { d: diag, e: off }
        }
        _ => {
            let diag =
                xs.iter().map(|&r| 2.0 * kin + v0 + 2.0 * k * (r - 1.0) * (r - 1.0) + a * (a + 1.0) / (r * r)).collect();
            Tridiagonal { d: diag, e: vec![-kin; inner - 1] }
        }
    }
}

fn check_grid(d: u32, k: f64, grid: &RadialGrid) -> Result<(), OracleError> {
    let len = length(k);
    let have = len / grid.spacing();
    if have < MIN_POINTS_PER_LENGTH {
        return Err(OracleError::UnderResolved { have, need: MIN_POINTS_PER_LENGTH });
    }
    let center = if d == 2 { 0.0 } else { 1.0 };
    if (center - grid.r_min) < MIN_REACH * len || (grid.r_max - center) < MIN_REACH * len {
        return Err(OracleError::BadGrid(format!("must reach {MIN_REACH} oscillator lengths past the centre")));
    }
    if d == 3 && grid.r_min <= 0.0 {
        return Err(OracleError::BadGrid("r_min must be positive".into()));
    }
    Ok(())
}

/// Lowest `n_levels` eigenvalues of the radial equation with the quadratic
/// well `V₀ + 2k(r−1)²`, Dirichlet ends, Richardson-extrapolated from the
/// grid and its halved spacing.
///
/// D=2 uses `ρ = ln r`, the D=2 calibration `V₀` and angular number `m`;
/// D=3 uses `f = rR`, `V₀ = −√(2k)` and angular number `l`.
pub fn fd_spectrum(d: u32, k: f64, angular: i64, n_levels: usize, grid: &RadialGrid) -> Result<Vec<f64>, OracleError> {
    if d != 2 && d != 3 {
        return Err(OracleError::BadDimension(d));
    }
    if !(k > 0.0) {
        return Err(OracleError::BadK(k));
    }
    check_grid(d, k, grid)?;
    let v0 = if d == 2 { solve_v0(k)? } else { -(2.0 * k).sqrt() };
    let coarse = assemble(d, k, angular, grid, v0);
    let fine = assemble(d, k, angular, &grid.refined(), v0);
    Ok((0..n_levels).map(|j| (4.0 * fine.eigenvalue(j) - coarse.eigenvalue(j)) / 3.0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_count_on_known_matrix() {
        // tridiag(−1, 2, −1) of size 4: eigenvalues 2 − 2cos(jπ/5)
        let t = Tridiagonal { d: vec![2.0; 4], e: vec![-1.0; 3] };
        for j in 0..4 {
            let want = 2.0 - 2.0 * ((j + 1) as f64 * std::f64::consts::PI / 5.0).cos();
            assert!((t.eigenvalue(j) - want).abs() < 1e-14);
        }
        assert_eq!(t.count_below(0.0), 0);
        assert_eq!(t.count_below(5.0), 4);
    }

    #[test]
    fn pure_oscillator_levels() {
        // D=3, l=0: V₀ + √(2k)(2n+1) exactly for the quadratic well.
        let k = 1e6;
        let grid = RadialGrid::centered(3, k, 200.0).unwrap();
        let e = fd_spectrum(3, k, 0, 2, &grid).unwrap();
        let s = (2.0 * k).sqrt();
        assert!(e[0].abs() < 1e-3, "{}", e[0]);
        assert!((e[1] - 2.0 * s).abs() < 1e-3 * s);
    }

    #[test]
    fn rejects_coarse_or_short_grids() {
        let k = 1e6;
        let coarse = RadialGrid::centered(3, k, 10.0).unwrap();
        assert!(matches!(fd_spectrum(3, k, 0, 1, &coarse), Err(OracleError::UnderResolved { .. })));
        let short = RadialGrid::new(0.99, 1.01, 20001).unwrap();
        assert!(matches!(fd_spectrum(3, k, 0, 1, &short), Err(OracleError::BadGrid(_))));
        assert!(fd_spectrum(4, k, 0, 1, &short).is_err());
        assert!(RadialGrid::new(1.0, 0.0, 10).is_err());
    }

    #[test]
    fn d2_gap() {
        let k = 1e6;
        let grid = RadialGrid::centered(2, k, 200.0).unwrap();
        let e = fd_spectrum(2, k, 1, 2, &grid).unwrap();
        let want = 2.0 * (2.0 * k).sqrt() - 2.0;
        assert!(((e[1] - e[0]) / want - 1.0).abs() < 0.02);
    }
}
