use rayon::prelude::*;

use crate::{
    c_l, circle_matrix_element, dplus_element, fd_spectrum, flemma_params, loglog_slope, printed_j,
    solve_em, sphere_deriv_integral, sphere_radial_integral, tail_shift_bound, xplus_element, ExpPoly,
    OracleError, RadialGrid, RadialWeight, SphereState,
};

/// Five decades of stiffness.
pub const DEFAULT_K_SWEEP: [f64; 5] = [1e4, 1e5, 1e6, 1e7, 1e8];

/// Points per oscillator length for the finite-difference levels.
const FD_RESOLUTION: f64 = 400.0;

/// One exact-vs-asymptotic comparison at one `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub k: f64,
    pub quantity: &'static str,
    pub exact: f64,
    pub asymptotic: f64,
    pub abs_diff: f64,
}

/// Log-log slope of `abs_diff` against `k` for one quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeFit {
    pub quantity: &'static str,
    pub label: &'static str,
    pub slope: f64,
    pub expected: f64,
    pub band: f64,
}

impl SlopeFit {
    pub fn pass(&self) -> bool {
        (self.slope - self.expected).abs() <= self.band
    }
}

/// A non-slope check over the sweep: `value <= tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub quantity: &'static str,
    pub label: &'static str,
    pub value: f64,
    pub tolerance: f64,
}

impl BoundCheck {
    pub fn pass(&self) -> bool {
        self.value.is_finite() && self.value <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub ks: Vec<f64>,
    pub rows: Vec<SweepRow>,
    pub fits: Vec<SlopeFit>,
    pub bounds: Vec<BoundCheck>,
}

struct Quantity {
    name: &'static str,
    label: &'static str,
    /// Expected remainder slope and band; `None` for rows only used by bounds.
    slope: Option<(f64, f64)>,
    eval: fn(f64) -> Result<(f64, f64), OracleError>,
}

fn fd_levels(d: u32, k: f64, angular: i64) -> Result<Vec<f64>, OracleError> {
    fd_spectrum(d, k, angular, 2, &RadialGrid::centered(d, k, FD_RESOLUTION)?)
}

const ENERGY_BAND: f64 = 0.15;
const ELEMENT_BAND: f64 = 0.2;

fn quantities() -> Vec<Quantity> {
    vec![
        Quantity {
            name: "E_0,1 (D=2, energy equation)",
            label: "Em",
            slope: Some((-0.5, ENERGY_BAND)),
            eval: |k| Ok((solve_em(k, 1, 0)?.energy, 1.0)),
        },
        Quantity {
            name: "E_0,2 (D=2, energy equation)",
            label: "Em",
            slope: Some((-0.5, ENERGY_BAND)),
            eval: |k| Ok((solve_em(k, 2, 0)?.energy, 4.0)),
        },
        Quantity {
            name: "E_0,1 (D=3, finite differences)",
            label: "harmoscD=3",
            slope: Some((-0.5, ENERGY_BAND)),
            eval: |k| Ok((fd_levels(3, k, 1)?[0], 2.0)),
        },
        Quantity {
            name: "E_0,2 (D=3, finite differences)",
            label: "harmoscD=3",
            slope: Some((-0.5, ENERGY_BAND)),
            eval: |k| Ok((fd_levels(3, k, 2)?[0], 6.0)),
        },
        Quantity {
            name: "n=1 gap (D=2, finite differences)",
            label: "Em",
            slope: None,
            eval: |k| {
                let e = fd_levels(2, k, 0)?;
                Ok((e[1] - e[0], 2.0 * (2.0 * k).sqrt() - 2.0))
            },
        },
        Quantity {
            name: "n=1 gap (D=3, finite differences)",
            label: "harmoscD=3",
            slope: None,
            eval: |k| {
                let e = fd_levels(3, k, 1)?;
                Ok((e[1] - e[0], 2.0 * (2.0 * k).sqrt()))
            },
        },
        Quantity {
            name: "<psi_1, (1+rho+rho^2) psi_1>",
            label: "flemma",
            slope: Some((-1.5, ELEMENT_BAND)),
            eval: |k| {
                let e = circle_matrix_element(&ExpPoly::polynomial(vec![1.0, 1.0, 1.0]), 0, 1, 1, k)?;
                Ok((e.exact, e.asymptotic))
            },
        },
        Quantity {
            name: "<psi_2, x+ psi_1>",
            label: "flemma",
            slope: Some((-1.5, ELEMENT_BAND)),
            eval: |k| {
                let e = xplus_element(1, k)?;
                Ok((e.exact, e.asymptotic))
            },
        },
        Quantity {
            name: "K_1,2",
            label: "deffs",
            slope: Some((-1.5, ELEMENT_BAND)),
            eval: |k| Ok((flemma_params(k, 1, 2)?.k_factor, 1.0)),
        },
        Quantity {
            name: "int f_2 f_1 / r (series through 1/k)",
            label: "general",
            slope: Some((-1.5, ELEMENT_BAND)),
            eval: |k| sphere_radial_integral(&RadialWeight::InverseR, 2, 1, k),
        },
        Quantity {
            name: "int f_2 f_1 r vs c_2",
            label: "defc_l",
            slope: Some((-1.5, ELEMENT_BAND)),
            eval: |k| Ok((sphere_radial_integral(&RadialWeight::Poly(vec![0.0, 1.0]), 2, 1, k)?.0, c_l(2, k))),
        },
        Quantity {
            name: "J_2",
            label: "JlMl",
            slope: Some((-1.5, ELEMENT_BAND)),
            eval: |k| Ok((sphere_radial_integral(&RadialWeight::InverseR, 2, 1, k)?.0, printed_j(2, k))),
        },
        Quantity {
            name: "M_2",
            label: "JlMl",
            slope: Some((-1.5, ELEMENT_BAND)),
            eval: |k| {
                let d = sphere_deriv_integral(2, k)?;
                Ok((d.exact, d.printed))
            },
        },
        Quantity {
            name: "<psi_0, d+ psi_1>",
            label: "part+",
            slope: Some((-1.5, ELEMENT_BAND)),
            eval: |k| {
                let e = dplus_element(1, k)?;
                Ok((e.exact, e.asymptotic))
            },
        },
    ]
}

/// Relative tolerance of the n=1 gaps.
const GAP_TOL: f64 = 0.02;
/// Largest allowed share of a normalization integral lying at `r < 0`.
const TAIL_TOL: f64 = 1e-10;

/// Every comparison at every `k`, the slope fits and the bound checks.
/// Points are computed in parallel; the output order is fixed.
pub fn run_sweep(ks: &[f64]) -> Result<SweepReport, OracleError> {
    let table = quantities();
    let per_k: Vec<Vec<SweepRow>> = ks
        .par_iter()
        .map(|&k| {
            table
                .iter()
                .map(|q| {
                    let (exact, asymptotic) = (q.eval)(k)?;
                    Ok(SweepRow { k, quantity: q.name, exact, asymptotic, abs_diff: (exact - asymptotic).abs() })
                })
                .collect::<Result<Vec<_>, OracleError>>()
        })
        .collect::<Result<_, _>>()?;
    let rows: Vec<SweepRow> = per_k.into_iter().flatten().collect();

    let fits = table
        .iter()
        .filter_map(|q| {
            let (expected, band) = q.slope?;
            let pts: Vec<(f64, f64)> = rows.iter().filter(|r| r.quantity == q.name).map(|r| (r.k, r.abs_diff)).collect();
            Some(SlopeFit { quantity: q.name, label: q.label, slope: loglog_slope(&pts), expected, band })
        })
        .collect();

    let mut bounds = Vec::new();
    for q in table.iter().filter(|q| q.slope.is_none()) {
        let worst = rows
            .iter()
            .filter(|r| r.quantity == q.name)
            .map(|r| (r.exact / r.asymptotic - 1.0).abs())
            .fold(0.0, f64::max);
        bounds.push(BoundCheck { quantity: q.name, label: q.label, value: worst, tolerance: GAP_TOL });
    }
    // Share of ∫ f_l² lost by extending r > 0 to the whole line.
    let tail = ks
        .iter()
        .flat_map(|&k| (0..=3).map(move |l| SphereState::new(k, l)))
        .map(|s| {
            let t = tail_shift_bound(s.k_l.sqrt(), s.r_tilde());
            (0.25 * s.k_l.ln() - 0.5 * std::f64::consts::PI.ln() + t.log_prefactor).exp() * t.exact_scaled
        })
        .fold(0.0, f64::max);
    bounds.push(BoundCheck { quantity: "tail shift of f_l^2, l <= 3", label: "error", value: tail, tolerance: TAIL_TOL });

    Ok(SweepReport { ks: ks.to_vec(), rows, fits, bounds })
}

impl SweepReport {
    pub fn fit(&self, quantity: &str) -> Option<&SlopeFit> {
        self.fits.iter().find(|f| f.quantity == quantity)
    }

    pub fn bound(&self, quantity: &str) -> Option<&BoundCheck> {
        self.bounds.iter().find(|b| b.quantity == quantity)
    }

    pub fn all_pass(&self) -> bool {
        self.fits.iter().all(SlopeFit::pass) && self.bounds.iter().all(BoundCheck::pass)
    }
}
