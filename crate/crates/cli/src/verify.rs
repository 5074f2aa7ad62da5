use fuzzy_circle::{build_so3_realization, verify_prop21};
use fuzzy_sphere::{build_so4_realization, theta_ladders, verify_prop31};
use harmonics::{verify_ladder_identities, LadderTable};
use linalg_core::{Check, CheckSet};

use crate::args::{Format, VerifyArgs};
use crate::report::{checks_report, Config, Report};
use crate::{build_model, CliError, Model};

const LADDER_TOL: f64 = 1e-13;

pub fn suite(model: &Model) -> CheckSet {
    let mut out = CheckSet::default();
    match model {
        Model::Circle(m) => {
            out.extend(verify_prop21(m));
            out.extend(build_so3_realization(m).verify(m));
        }
        Model::Sphere(m) => {
            out.extend(verify_prop31(m));
            let so4 = build_so4_realization(m);
            out.extend(so4.verify(m));
            out.extend(theta_ladders(&so4).report);
            let ladder = verify_ladder_identities(&LadderTable::new(m.lambda));
            for (name, worst) in ladder.families {
                out.push(Check::new(name, "Aproperties", worst, LADDER_TOL));
            }
        }
    }
    out
}

pub fn run(a: &VerifyArgs, format: Format, mut config: Config) -> Result<Report, CliError> {
    let model = build_model(&a.model, &mut config)?;
    let mut checks = suite(&model);
    if let Some(tol) = a.tol {
        config.push("tol", linalg_core::fmt17(tol));
        for c in &mut checks.checks {
            c.tolerance = tol;
        }
    }
    Ok(checks_report("verify", &config, &checks, format))
}
