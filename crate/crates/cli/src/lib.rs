//! The `fuzzylab` command line: argument types, command drivers and report
//! formatting. Every number is printed with 17 significant digits, so equal
//! configurations give byte-identical output at any thread count.

pub mod args;
mod converge;
mod dump;
mod oracle;
mod report;
mod spectrum;
mod verify;

use convergence_lab::KSchedule;
use fuzzy_circle::{build_circle, CircleModel};
use fuzzy_sphere::{build_sphere, SphereModel};
use harmonics::LadderTable;

pub use args::{Cli, Command, Format};
pub use report::{num, Config, Report};

/// Any error here is a usage or configuration problem (exit code 2).
#[derive(Debug, Clone, PartialEq)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

pub(crate) fn fail<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError(msg.into()))
}

pub(crate) fn wrap<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, CliError> {
    r.map_err(|e| CliError(e.to_string()))
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let mut config = Config::default();
    if let Some(seed) = cli.seed {
        config.push("seed", seed);
    }
    match &cli.command {
        Command::Verify(a) => verify::run(a, cli.format.unwrap_or(Format::Json), config),
        Command::Spectrum(a) => spectrum::run(a, cli.format.unwrap_or(Format::Csv), config),
        Command::Converge(a) => converge::run(a, cli.format.unwrap_or(Format::Csv), config),
        Command::Oracle(a) => oracle::run(a, cli.format.unwrap_or(Format::Csv), config),
        Command::Dump(a) => dump::run(a, config),
    }
}

/// `--schedule` name, with `custom` meaning the value of `--k`.
pub(crate) fn schedule_from(name: Option<&str>, k: Option<f64>, default: KSchedule) -> Result<KSchedule, CliError> {
    match (name, k) {
        (_, Some(k)) => Ok(KSchedule::Fixed(k)),
        (Some("custom"), None) => fail("--schedule custom needs --k"),
        (Some(s), None) => wrap(s.parse::<KSchedule>()),
        (None, None) => Ok(default),
    }
}

pub(crate) enum Model {
    Circle(CircleModel),
    Sphere(SphereModel),
}

/// Builds the model for `--d/--lambda/--k/--schedule`, refusing an
/// inconsistent k unless `--force`.
pub(crate) fn build_model(a: &args::ModelArgs, config: &mut Config) -> Result<Model, CliError> {
    if a.lambda < 1 {
        return fail("Λ ≥ 1 required");
    }
    let schedule = schedule_from(a.schedule.as_deref(), a.k, KSchedule::Default)?;
    let k = schedule.k(a.lambda);
    config.push("d", a.d);
    config.push("lambda", a.lambda);
    config.push("schedule", schedule.name());
    config.push("k", linalg_core::fmt17(k));
    config.push("force", a.force);
    let (model, inconsistent) = match a.d {
        2 => {
            let m = wrap(build_circle(a.lambda, k))?;
            let bad = m.inconsistent;
            (Model::Circle(m), bad)
        }
        3 => {
            let m = wrap(build_sphere(a.lambda, k, &LadderTable::new(a.lambda)))?;
            let bad = m.inconsistent;
            (Model::Sphere(m), bad)
        }
        d => return fail(format!("--d must be 2 or 3, got {d}")),
    };
    if inconsistent && !a.force {
        return fail(format!("k = {k} is too small for Λ = {} (pass --force to build anyway)", a.lambda));
    }
    Ok(model)
}
