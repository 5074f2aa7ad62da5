use linalg_core::{fmt17, hermitian_eig, OperatorMatrix};
use serde_json::json;

use crate::args::{Format, ModelArgs};
use crate::report::{num, to_text, Config, Report};
use crate::{build_model, wrap, CliError, Model};

/// Eigenvalues closer than this are one level.
const GROUP_TOL: f64 = 1e-9;

pub fn run(a: &ModelArgs, format: Format, mut config: Config) -> Result<Report, CliError> {
    let model = build_model(a, &mut config)?;
    let ops: Vec<(&str, &OperatorMatrix)> = match &model {
        Model::Circle(m) => vec![("H", &m.h_bar), ("R2", &m.r2), ("L", &m.l_bar)],
        Model::Sphere(m) => vec![("H", &m.h_bar), ("R2", &m.r2), ("L2", &m.l2), ("L3", &m.l_cart[2])],
    };
    let mut levels = Vec::new();
    for (name, op) in ops {
        for (value, mult) in wrap(hermitian_eig(op))?.grouped(GROUP_TOL) {
            levels.push((name, value, mult));
        }
    }
    let text = match format {
        Format::Csv => {
            let mut out = config.csv_header();
            out.push_str("operator,value,multiplicity\n");
            for (name, value, mult) in &levels {
                out.push_str(&format!("{name},{},{mult}\n", fmt17(*value)));
            }
            out
        }
        Format::Json => {
            let rows: Vec<_> = levels
                .iter()
                .map(|(name, value, mult)| json!({"operator": name, "value": num(*value), "multiplicity": mult}))
                .collect();
            to_text(&json!({"command": "spectrum", "config": config.json(), "levels": rows}))
        }
    };
    Ok(Report { text, pass: true })
}
