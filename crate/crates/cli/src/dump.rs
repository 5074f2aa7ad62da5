use fuzzy_sphere::build_fuzzy_harmonics;
use harmonics::LadderTable;
use linalg_core::OperatorMatrix;

use crate::args::{DumpArgs, DumpWhat};
use crate::report::{Config, Report};
use crate::{build_model, fail, wrap, CliError, Model};

fn matrices(named: &[(&str, &OperatorMatrix)]) -> String {
    let mut out = String::from("operator,row,col,re,im\n");
    for (name, op) in named {
        for line in op.to_csv().lines().skip(1) {
            out.push_str(&format!("{name},{line}\n"));
        }
    }
    out
}

pub fn run(a: &DumpArgs, mut config: Config) -> Result<Report, CliError> {
    let model = build_model(&a.model, &mut config)?;
    let body = match (a.what, &model) {
        (DumpWhat::Operators, Model::Circle(m)) => matrices(&[
            ("xi+", &m.xi_plus),
            ("xi-", &m.xi_minus),
            ("L", &m.l_bar),
            ("H", &m.h_bar),
            ("R2", &m.r2),
        ]),
        (DumpWhat::Operators, Model::Sphere(m)) => matrices(&[
            ("x+", m.xa(1)),
            ("x0", m.xa(0)),
            ("x-", m.xa(-1)),
            ("L+", m.la(1)),
            ("L0", m.la(0)),
            ("L-", m.la(-1)),
            ("L2", &m.l2),
            ("R2", &m.r2),
        ]),
        (DumpWhat::Ladder, _) => LadderTable::new(a.model.lambda).to_csv(),
        (DumpWhat::Harmonics, Model::Sphere(m)) => wrap(build_fuzzy_harmonics(m, 2 * m.lambda))?.to_csv(),
        (DumpWhat::Harmonics, Model::Circle(_)) => return fail("fuzzy harmonics need --d 3"),
    };
    config.push("what", format!("{:?}", a.what).to_lowercase());
    Ok(Report { text: config.csv_header() + &body, pass: true })
}
