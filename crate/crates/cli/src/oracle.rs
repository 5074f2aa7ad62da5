use linalg_core::fmt17;
use radial_oracle::{run_sweep, tail_shift_bound, SphereState, DEFAULT_K_SWEEP};
use serde_json::{json, Value};

use crate::args::{Format, OracleArgs, OracleCheck};
use crate::report::{csv_field, num, to_text, Config, Report};
use crate::{fail, wrap, CliError};

const TAIL_QUANTITY: &str = "tail shift of f_l^2, l <= 3";

fn category(quantity: &str) -> OracleCheck {
    if quantity.starts_with("E_0") {
        OracleCheck::Energies
    } else if quantity.starts_with("n=1 gap") {
        OracleCheck::Gaps
    } else if quantity.contains("vs c_2") {
        OracleCheck::Cl
    } else if quantity == TAIL_QUANTITY {
        OracleCheck::Tail
    } else {
        OracleCheck::Elements
    }
}

fn selected(a: &OracleArgs, quantity: &str) -> bool {
    let cat = category(quantity);
    if a.check != OracleCheck::All && a.check != cat {
        return false;
    }
    match (a.d, cat) {
        (Some(d), OracleCheck::Energies | OracleCheck::Gaps) => quantity.contains(&format!("D={d}")),
        _ => true,
    }
}

pub fn run(a: &OracleArgs, format: Format, mut config: Config) -> Result<Report, CliError> {
    let ks = a.ks.clone().unwrap_or_else(|| DEFAULT_K_SWEEP.to_vec());
    if ks.len() < 2 || ks.iter().any(|k| !(*k > 0.0 && k.is_finite())) {
        return fail("--ks needs at least two positive values");
    }
    if let Some(d) = a.d {
        if d != 2 && d != 3 {
            return fail(format!("--d must be 2 or 3, got {d}"));
        }
        config.push("d", d);
    }
    config.push("check", format!("{:?}", a.check).to_lowercase());
    config.push("ks", ks.iter().map(|k| fmt17(*k)).collect::<Vec<_>>().join(" "));

    let report = wrap(run_sweep(&ks))?;
    let rows: Vec<_> = report.rows.iter().filter(|r| selected(a, r.quantity)).collect();
    let fits: Vec<_> = report.fits.iter().filter(|f| selected(a, f.quantity)).collect();
    let bounds: Vec<_> = report.bounds.iter().filter(|b| selected(a, b.quantity)).collect();
    let pass = fits.iter().all(|f| f.pass()) && bounds.iter().all(|b| b.pass());

    // ∫₀^∞ e^{−a(r+b)²} against its asymptotic estimate, per k and l.
    let tails: Vec<(f64, u32, radial_oracle::TailShift)> = if matches!(a.check, OracleCheck::All | OracleCheck::Tail) {
        ks.iter()
            .flat_map(|&k| {
                (0..=3u32).map(move |l| {
                    let s = SphereState::new(k, l);
                    (k, l, tail_shift_bound(s.k_l.sqrt(), s.r_tilde()))
                })
            })
            .collect()
    } else {
        Vec::new()
    };

    let text = match format {
        Format::Csv => {
            let mut out = config.csv_header();
            if a.check == OracleCheck::Tail {
                out.push_str("k,l,log_prefactor,exact_scaled,estimate_scaled,ratio\n");
                for (k, l, t) in &tails {
                    out.push_str(&format!(
                        "{},{l},{},{},{},{}\n",
                        fmt17(*k),
                        fmt17(t.log_prefactor),
                        fmt17(t.exact_scaled),
                        fmt17(t.estimate_scaled),
                        fmt17(t.ratio())
                    ));
                }
            } else {
                out.push_str("k,quantity,exact,asymptotic,abs_diff\n");
                for r in &rows {
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        fmt17(r.k),
                        csv_field(r.quantity),
                        fmt17(r.exact),
                        fmt17(r.asymptotic),
                        fmt17(r.abs_diff)
                    ));
                }
            }
            out
        }
        Format::Json => {
            let fit_json: Vec<Value> = fits
                .iter()
                .map(|f| {
                    json!({
                        "quantity": f.quantity,
                        "label": f.label,
                        "slope": num(f.slope),
                        "expected": num(f.expected),
                        "band": num(f.band),
                        "pass": f.pass(),
                    })
                })
                .collect();
            let bound_json: Vec<Value> = bounds
                .iter()
                .map(|b| {
                    json!({
                        "quantity": b.quantity,
                        "label": b.label,
                        "value": num(b.value),
                        "tolerance": num(b.tolerance),
                        "pass": b.pass(),
                    })
                })
                .collect();
            let row_json: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "k": num(r.k),
                        "quantity": r.quantity,
                        "exact": num(r.exact),
                        "asymptotic": num(r.asymptotic),
                        "abs_diff": num(r.abs_diff),
                    })
                })
                .collect();
            let tail_json: Vec<Value> = tails
                .iter()
                .map(|(k, l, t)| {
                    json!({
                        "k": num(*k),
                        "l": l,
                        "log_prefactor": num(t.log_prefactor),
                        "exact_scaled": num(t.exact_scaled),
                        "estimate_scaled": num(t.estimate_scaled),
                        "ratio": num(t.ratio()),
                    })
                })
                .collect();
            to_text(&json!({
                "command": "oracle",
                "config": config.json(),
                "fits": fit_json,
                "bounds": bound_json,
                "rows": row_json,
                "tail": tail_json,
                "all_pass": pass,
            }))
        }
    };
    Ok(Report { text, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn categories() {
        assert_eq!(category("E_0,1 (D=2, energy equation)"), OracleCheck::Energies);
        assert_eq!(category("n=1 gap (D=3, finite differences)"), OracleCheck::Gaps);
        assert_eq!(category("int f_2 f_1 r vs c_2"), OracleCheck::Cl);
        assert_eq!(category("J_2"), OracleCheck::Elements);
        assert_eq!(category(TAIL_QUANTITY), OracleCheck::Tail);
    }
}
