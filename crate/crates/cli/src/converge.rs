use convergence_lab::{
    circle_f_corpus, circle_phi_corpus, nonconvergence_witness_circle, nonconvergence_witness_sphere,
    product_convergence_circle, product_convergence_sphere, product_grid, sphere_f_corpus, sphere_phi_corpus,
    strong_convergence_circle, strong_convergence_sphere, uniform_norm_bound_circle, DecayTable, KSchedule, NormTable,
    ProductTable, TruncatedFourier, TruncatedSphFn,
};
use fuzzy_circle::build_circle;
use fuzzy_sphere::build_sphere;
use harmonics::LadderTable;
use linalg_core::fmt17;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{ConvergeArgs, Format, Table};
use crate::report::{num, to_text, Config, Report};
use crate::{fail, schedule_from, wrap, CliError};

fn pick<T: Clone>(corpus: Vec<(&'static str, T)>, name: &str) -> Result<T, CliError> {
    let names: Vec<&str> = corpus.iter().map(|(n, _)| *n).collect();
    match corpus.into_iter().find(|(n, _)| *n == name) {
        Some((_, v)) => Ok(v),
        None => fail(format!("unknown corpus entry {name:?}; choose from {}", names.join(", "))),
    }
}

/// One output table: column names and formatted cells.
struct Grid {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    pass: bool,
}

enum Cell {
    Int(usize),
    Num(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => fmt17(*x),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Num(x) => num(*x),
            Cell::Bool(b) => json!(b),
            Cell::Text(s) => json!(s),
        }
    }
}

fn decay(t: DecayTable) -> Grid {
    let pass = t.all_pass();
    let rows = t
        .rows
        .iter()
        .map(|r| {
            vec![
                Cell::Int(r.lambda),
                Cell::Num(r.k),
                Cell::Num(r.error),
                Cell::Num(r.bound),
                Cell::Bool(r.pass()),
                Cell::Text(r.warning()),
            ]
        })
        .collect();
    Grid { columns: vec!["lambda", "k", "error", "bound", "pass", "warning"], rows, pass }
}

fn norms(t: NormTable) -> Grid {
    let pass = t.all_pass();
    let rows = t
        .rows
        .iter()
        .map(|r| {
            let tag = if r.below_schedule { "below-schedule" } else { "" };
            vec![
                Cell::Int(r.lambda),
                Cell::Num(r.k),
                Cell::Num(r.norm),
                Cell::Num(r.bound),
                Cell::Bool(r.pass()),
                Cell::Text(tag.into()),
            ]
        })
        .collect();
    Grid { columns: vec!["lambda", "k", "norm", "bound", "pass", "warning"], rows, pass }
}

fn products(t: ProductTable) -> Grid {
    let rows = t
        .rows
        .iter()
        .map(|r| vec![Cell::Int(r.lambda), Cell::Num(r.k), Cell::Num(r.product_error), Cell::Num(r.commutator)])
        .collect();
    Grid { columns: vec!["lambda", "k", "product_error", "commutator"], rows, pass: true }
}

fn witnesses(d: u32, schedule: &KSchedule, lambdas: &[usize], tol: f64) -> Result<Grid, CliError> {
    let per: Vec<Vec<Vec<Cell>>> = lambdas
        .par_iter()
        .map(|&lambda| {
            let k = schedule.k(lambda);
            let found: Vec<(&str, convergence_lab::Witness, f64)> = if d == 2 {
                let w = nonconvergence_witness_circle(&wrap(build_circle(lambda, k))?);
                vec![("eta+", w, w.formula)]
            } else {
                let w = nonconvergence_witness_sphere(&wrap(build_sphere(lambda, k, &LadderTable::new(lambda)))?);
                vec![("x+", w.plus, w.plus.formula), ("x-", w.minus, w.minus.formula), ("x0", w.zero, w.zero_printed)]
            };
            Ok(found
                .into_iter()
                .map(|(name, w, printed)| {
                    vec![
                        Cell::Int(lambda),
                        Cell::Num(k),
                        Cell::Text(name.into()),
                        Cell::Num(w.vector),
                        Cell::Num(w.band_norm),
                        Cell::Num(w.formula),
                        Cell::Num(printed),
                        Cell::Bool((w.vector - w.formula).abs() <= tol),
                    ]
                })
                .collect())
        })
        .collect::<Result<_, CliError>>()?;
    let rows: Vec<Vec<Cell>> = per.into_iter().flatten().collect();
    let pass = rows.iter().all(|r| matches!(r[7], Cell::Bool(true)));
    Ok(Grid {
        columns: vec!["lambda", "k", "operator", "witness", "band_norm", "formula", "printed_formula", "pass"],
        rows,
        pass,
    })
}

pub fn run(a: &ConvergeArgs, format: Format, mut config: Config) -> Result<Report, CliError> {
    let (default_schedule, default_top) = match a.d {
        2 => (KSchedule::PropCircle, 8),
        3 => (KSchedule::PropSphere, 4),
        d => return fail(format!("--d must be 2 or 3, got {d}")),
    };
    let schedule = schedule_from(a.schedule.as_deref(), a.k, default_schedule)?;
    let top = a.lambda.unwrap_or(default_top);
    if a.lambda_min < 1 || top < a.lambda_min {
        return fail(format!("need 1 ≤ lambda-min ≤ lambda, got {}..{top}", a.lambda_min));
    }
    let lambdas: Vec<usize> = (a.lambda_min..=top).collect();
    config.push("d", a.d);
    config.push("table", format!("{:?}", a.table).to_lowercase());
    config.push("schedule", schedule.name());
    config.push("lambda_min", a.lambda_min);
    config.push("lambda", top);

    let grid = if a.table == Table::Witness {
        config.push("tol", fmt17(a.tol));
        witnesses(a.d, &schedule, &lambdas, a.tol)?
    } else if a.d == 2 {
        let f_name = a.f.as_deref().unwrap_or("u");
        let f: TruncatedFourier = pick(circle_f_corpus(), f_name)?;
        config.push("f", f_name);
        match a.table {
            Table::Norm => norms(wrap(uniform_norm_bound_circle(&f, &schedule, &lambdas))?),
            _ => {
                let phi_name = a.phi.as_deref().unwrap_or("gauss");
                let phi: TruncatedFourier = pick(circle_phi_corpus(), phi_name)?;
                config.push("phi", phi_name);
                if a.table == Table::Product {
                    let g_name = a.g.as_deref().unwrap_or("2cos");
                    config.push("g", g_name);
                    let g = pick(circle_f_corpus(), g_name)?;
                    products(wrap(product_convergence_circle(&f, &g, &phi, &schedule, &lambdas))?)
                } else {
                    decay(wrap(strong_convergence_circle(&f, &phi, &schedule, &lambdas))?)
                }
            }
        }
    } else {
        let f_name = a.f.as_deref().unwrap_or("t0");
        let phi_name = a.phi.as_deref().unwrap_or("y00");
        let f: TruncatedSphFn = pick(sphere_f_corpus(), f_name)?;
        let phi: TruncatedSphFn = pick(sphere_phi_corpus(), phi_name)?;
        config.push("f", f_name);
        config.push("phi", phi_name);
        match a.table {
            Table::Norm => return fail("the norm table is circle-only"),
            Table::Product => {
                let g_name = a.g.as_deref().unwrap_or("gauss");
                config.push("g", g_name);
                let g = pick(sphere_f_corpus(), g_name)?;
                let grid = product_grid(f.degree() + g.degree() + phi.degree());
                products(wrap(product_convergence_sphere(&f, &g, &phi, &schedule, &lambdas, &grid))?)
            }
            _ => {
                let grid = product_grid(f.degree() + phi.degree());
                decay(wrap(strong_convergence_sphere(&f, &phi, &schedule, &lambdas, &grid))?)
            }
        }
    };

    let text = match format {
        Format::Csv => {
            let mut out = config.csv_header();
            out.push_str(&grid.columns.join(","));
            out.push('\n');
            for r in &grid.rows {
                out.push_str(&r.iter().map(Cell::csv).collect::<Vec<_>>().join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = grid
                .rows
                .iter()
                .map(|r| {
                    let map: serde_json::Map<String, Value> =
                        grid.columns.iter().zip(r).map(|(c, v)| (c.to_string(), v.json())).collect();
                    Value::Object(map)
                })
                .collect();
            to_text(&json!({"command": "converge", "config": config.json(), "rows": rows, "all_pass": grid.pass}))
        }
    };
    Ok(Report { text, pass: grid.pass })
}
