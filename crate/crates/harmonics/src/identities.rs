use crate::LadderTable;

/// Maximum absolute violation per identity family.
#[derive(Debug, Clone, Default)]
pub struct IdentityReport {
    pub families: Vec<(String, f64)>,
}

impl IdentityReport {
    pub fn max_violation(&self) -> f64 {
        self.families.iter().map(|f| f.1).fold(0.0, f64::max)
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.families.iter().find(|f| f.0 == name).map(|f| f.1)
    }
}

struct Acc<'a> {
    t: &'a LadderTable,
    l_max: i32,
    report: IdentityReport,
}

impl Acc<'_> {
    /// Runs `f` over every (l, m) with `l <= l_max` and records the worst value.
    fn family(&mut self, name: &str, f: impl Fn(&LadderTable, i32, i32) -> f64) {
        let mut worst = 0.0f64;
        for l in 0..=self.l_max {
            for m in -l..=l {
                worst = worst.max(f(self.t, l, m).abs());
            }
        }
        self.report.families.push((name.to_string(), worst));
    }
}

/// Checks the ladder identities on every index with `l + 1` inside the table.
///
/// The mixed families use the index placement that the derivation actually
/// needs; see the tests for the three printed variants that do not hold.
pub fn verify_ladder_identities(t: &LadderTable) -> IdentityReport {
    let l_max = t.l_top() - 1;
    let d2 = |l: i32| {
        let top = (t.lambda_max + 1) as f64;
        top * top - (l * l) as f64
    };
    let mut acc = Acc { t, l_max, report: IdentityReport::default() };

    acc.family("A/B duality", |t, l, m| (-1..=1).map(|a| (t.a(a, l, m) - t.b(-a, l - 1, m + a)).abs()).fold(0.0, f64::max));
    acc.family("commuting t (same level)", |t, l, m| {
        let mut w = 0.0f64;
        for a in -1..=1 {
            for b in -1..=1 {
                let lhs = t.a(b, l, m) * t.a(-a, l, m + b + a) + t.a(-b, l + 1, m + b) * t.a(a, l + 1, m + b);
                let rhs = t.a(a, l, m) * t.a(-b, l, m + a + b) + t.a(-a, l + 1, m + a) * t.a(b, l + 1, m + a);
                w = w.max((lhs - rhs).abs());
            }
        }
        w
    });
    acc.family("commuting t (two steps down)", |t, l, m| {
        let mut w = 0.0f64;
        for a in -1..=1 {
            for b in -1..=1 {
                w = w.max((t.a(b, l + 1, m) * t.a(a, l, m + b) - t.a(a, l + 1, m) * t.a(b, l, m + a)).abs());
            }
        }
        w
    });
    acc.family("sum_a A_{l+1} A_l = 0", |t, l, m| (-1..=1).map(|a| t.a(a, l + 1, m) * t.a(-a, l, m + a)).sum());
    acc.family("sum_a (A_l^a)^2 = l/(2l+1)", |t, l, m| {
        (-1..=1).map(|a| t.a(a, l, m).powi(2)).sum::<f64>() - l as f64 / (2 * l + 1) as f64
    });
    acc.family("sum_a (A_{l+1}^{a,m-a})^2 = (l+1)/(2l+1)", |t, l, m| {
        (-1..=1).map(|a| t.a(a, l + 1, m - a).powi(2)).sum::<f64>() - (l + 1) as f64 / (2 * l + 1) as f64
    });
    acc.family("t.t = 1", |t, l, m| {
        (-1..=1).map(|a| t.a(a, l, m).powi(2) + t.a(a, l + 1, m - a).powi(2)).sum::<f64>() - 1.0
    });

    let lf = |l: i32| (2 * l + 1) as f64;
    acc.family("A^-B^+ - A^+B^- = m/(2l+1)", |t, l, m| {
        if l == 0 {
            return 0.0;
        }
        t.a(-1, l, m) * t.b(1, l - 1, m - 1) - t.a(1, l, m) * t.b(-1, l - 1, m + 1) - m as f64 / lf(l)
    });
    acc.family("A^±B^0 - A^0B^± = ±γ/(2l+1)", |t, l, m| {
        if l == 0 {
            return 0.0;
        }
        [1, -1]
            .iter()
            .map(|&s| {
                t.a(s, l, m) * t.b(0, l - 1, m + s) - t.a(0, l, m) * t.b(s, l - 1, m) - s as f64 * t.gamma(s, l, m) / lf(l)
            })
            .map(f64::abs)
            .fold(0.0, f64::max)
    });
    acc.family("d_l^2 - d_{l+1}^2 = 2l+1", |_, l, _| d2(l) - d2(l + 1) - lf(l));
    acc.family("A γ_{l-1} = A γ_l", |t, l, m| {
        [1, -1].iter().map(|&a| (t.a(a, l, m) * t.gamma(a, l - 1, m + a) - t.a(a, l, m + a) * t.gamma(a, l, m)).abs()).fold(0.0, f64::max)
    });
    acc.family("B γ_{l+1} = B γ_l", |t, l, m| {
        [1, -1].iter().map(|&a| (t.b(a, l, m) * t.gamma(a, l + 1, m + a) - t.b(a, l, m + a) * t.gamma(a, l, m)).abs()).fold(0.0, f64::max)
    });
    acc.family("A^0 γ^± = ∓A^±", |t, l, m| {
        [1, -1]
            .iter()
            .map(|&s| (t.a(0, l, m) * t.gamma(s, l - 1, m) - t.a(0, l, m + s) * t.gamma(s, l, m) + s as f64 * t.a(s, l, m)).abs())
            .fold(0.0, f64::max)
    });
    acc.family("B^0 γ^± = ∓B^±", |t, l, m| {
        [1, -1]
            .iter()
            .map(|&s| (t.b(0, l, m) * t.gamma(s, l + 1, m) - t.b(0, l, m + s) * t.gamma(s, l, m) + s as f64 * t.b(s, l, m)).abs())
            .fold(0.0, f64::max)
    });
    acc.family("A^± γ^∓ = ∓A^0", |t, l, m| {
        [1, -1]
            .iter()
            .map(|&s| (t.a(s, l, m) * t.gamma(-s, l - 1, m + s) - t.a(s, l, m - s) * t.gamma(-s, l, m) + s as f64 * t.a(0, l, m)).abs())
            .fold(0.0, f64::max)
    });
    acc.family("B^± γ^∓ = ∓B^0", |t, l, m| {
        [1, -1]
            .iter()
            .map(|&s| (t.b(s, l, m) * t.gamma(-s, l + 1, m + s) - t.b(s, l, m - s) * t.gamma(-s, l, m) + s as f64 * t.b(0, l, m)).abs())
            .fold(0.0, f64::max)
    });
    acc.family("t.L = 0 (A, B)", |t, l, m| {
        let a = t.a(1, l, m - 1) * t.gamma(-1, l, m) + t.a(-1, l, m + 1) * t.gamma(1, l, m) + t.a(0, l, m) * m as f64;
        let b = t.b(1, l, m - 1) * t.gamma(-1, l, m) + t.b(-1, l, m + 1) * t.gamma(1, l, m) + t.b(0, l, m) * m as f64;
        a.abs().max(b.abs())
    });
    acc.family("L.t = 0 (A, B)", |t, l, m| {
        let a = t.a(1, l, m) * t.gamma(-1, l - 1, m + 1) + t.a(-1, l, m) * t.gamma(1, l - 1, m - 1) + t.a(0, l, m) * m as f64;
        let b = t.b(1, l, m) * t.gamma(-1, l + 1, m + 1) + t.b(-1, l, m) * t.gamma(1, l + 1, m - 1) + t.b(0, l, m) * m as f64;
        a.abs().max(b.abs())
    });
    acc.family("A^0B^0 + A^-B^+ + A^+B^- = l/(2l+1)", |t, l, m| {
        t.a(0, l, m) * t.b(0, l - 1, m) + t.a(-1, l, m) * t.b(1, l - 1, m - 1) + t.a(1, l, m) * t.b(-1, l - 1, m + 1)
            - l as f64 / lf(l)
    });
    acc.report
}
