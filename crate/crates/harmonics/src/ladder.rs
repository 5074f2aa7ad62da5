use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt::Write;

fn valid(l: i32, m: i32) -> bool {
    l >= 0 && m.abs() <= l
}

/// Coefficient of `Y_{l-1}^{m+a}` in `t^a Y_l^m`; zero outside the range.
pub fn a_coef(a: i32, l: i32, m: i32) -> f64 {
    if !valid(l, m) || !valid(l - 1, m + a) {
        return 0.0;
    }
    let (lf, mf) = (l as f64, m as f64);
    let den = (2.0 * lf + 1.0) * (2.0 * lf - 1.0);
    match a {
        0 => ((lf + mf) * (lf - mf) / den).sqrt(),
        1 => FRAC_1_SQRT_2 * ((lf - mf) * (lf - mf - 1.0) / den).sqrt(),
        -1 => -FRAC_1_SQRT_2 * ((lf + mf) * (lf + mf - 1.0) / den).sqrt(),
        _ => 0.0,
    }
}

/// Coefficient of `Y_{l+1}^{m+a}` in `t^a Y_l^m`.
pub fn b_coef(a: i32, l: i32, m: i32) -> f64 {
    if !valid(l, m) {
        return 0.0;
    }
    let (lf, mf) = (l as f64, m as f64);
    let den = (2.0 * lf + 1.0) * (2.0 * lf + 3.0);
    match a {
        0 => ((lf + mf + 1.0) * (lf - mf + 1.0) / den).sqrt(),
        1 => -FRAC_1_SQRT_2 * ((lf + mf + 1.0) * (lf + mf + 2.0) / den).sqrt(),
        -1 => FRAC_1_SQRT_2 * ((lf - mf + 1.0) * (lf - mf + 2.0) / den).sqrt(),
        _ => 0.0,
    }
}

/// `L_± Y_l^m = γ^{±,m}_l Y_l^{m±1}` with `L_± = (L_1 ± i L_2)/√2`.
pub fn gamma_coef(sign: i32, l: i32, m: i32) -> f64 {
    if !valid(l, m) || !valid(l, m + sign) {
        return 0.0;
    }
    let (lf, mf, s) = (l as f64, m as f64, sign as f64);
    FRAC_1_SQRT_2 * ((lf - s * mf) * (lf + s * mf + 1.0)).sqrt()
}

/// Precomputed A, B, γ for `0 <= l <= lambda_max + 2`.
#[derive(Debug, Clone)]
pub struct LadderTable {
    pub lambda_max: usize,
    l_top: i32,
    a: Vec<f64>,
    b: Vec<f64>,
    g: Vec<f64>,
}

impl LadderTable {
    pub fn new(lambda_max: usize) -> Self {
        let l_top = lambda_max as i32 + 2;
        let size = 3 * ((l_top + 1) * (l_top + 1)) as usize;
        let mut t = Self { lambda_max, l_top, a: vec![0.0; size], b: vec![0.0; size], g: vec![0.0; size] };
        for l in 0..=l_top {
            for m in -l..=l {
                for a in -1..=1 {
                    let k = t.slot(a, l, m).unwrap();
                    t.a[k] = a_coef(a, l, m);
                    t.b[k] = b_coef(a, l, m);
                    t.g[k] = if a == 0 { m as f64 } else { gamma_coef(a, l, m) };
                }
            }
        }
        t
    }

    pub fn l_top(&self) -> i32 {
        self.l_top
    }

    fn slot(&self, a: i32, l: i32, m: i32) -> Option<usize> {
        if !(-1..=1).contains(&a) || !valid(l, m) || l > self.l_top {
            return None;
        }
        Some(3 * (l * l + l + m) as usize + (a + 1) as usize)
    }

    pub fn a(&self, a: i32, l: i32, m: i32) -> f64 {
        self.slot(a, l, m).map_or(0.0, |k| self.a[k])
    }

    pub fn b(&self, a: i32, l: i32, m: i32) -> f64 {
        self.slot(a, l, m).map_or(0.0, |k| self.b[k])
    }

    /// γ for `sign = ±1`; `sign = 0` gives the L_0 eigenvalue m.
    pub fn gamma(&self, sign: i32, l: i32, m: i32) -> f64 {
        self.slot(sign, l, m).map_or(0.0, |k| self.g[k])
    }

    /// Rows `a,l,m,A,B` for debugging dumps.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,l,m,A,B\n");
        for l in 0..=self.l_top {
            for m in -l..=l {
                for a in -1..=1 {
                    let _ = writeln!(out, "{},{},{},{:.16e},{:.16e}", a, l, m, self.a(a, l, m), self.b(a, l, m));
                }
            }
        }
        out
    }
}
