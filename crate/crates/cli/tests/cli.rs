use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuzzylab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

/// `operator,value,multiplicity` rows for one operator, skipping the header comments.
fn levels(csv: &str, op: &str) -> Vec<(f64, usize)> {
    csv.lines()
        .filter(|l| l.starts_with(&format!("{op},")))
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect()
}

#[test]
fn verify_circle_passes() {
    let o = run(&["verify", "--d", "2", "--lambda", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["config"]["lambda"], "3");
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["label"] == "R^2D=2"));
}

#[test]
fn verify_sphere_with_explicit_k() {
    let o = run(&["verify", "--d", "3", "--lambda", "2", "--k", "36"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["failed"], 0);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["label"] == "R^2D=3"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--d", "3", "--lambda", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--d", "4", "--lambda", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--lambda", "2", "--k", "4", "--schedule", "default"]).status.code(), Some(2));
    assert_eq!(run(&["converge", "--schedule", "custom"]).status.code(), Some(2));
    assert_eq!(run(&["converge", "--f", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn inconsistent_k_needs_force() {
    assert_eq!(run(&["verify", "--d", "3", "--lambda", "5", "--k", "10"]).status.code(), Some(2));
    let o = run(&["verify", "--d", "3", "--lambda", "5", "--k", "10", "--force"]);
    assert!(matches!(o.status.code(), Some(0) | Some(1)));
    assert_eq!(json(&o)["config"]["force"], "true");
}

#[test]
fn tolerance_override_can_fail_the_suite() {
    let o = run(&["verify", "--d", "2", "--lambda", "4", "--tol", "1e-40"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(json(&o)["failed"].as_u64().unwrap() > 0);
}

#[test]
fn spectra_match_closed_forms() {
    let csv = stdout(&run(&["spectrum", "--d", "3", "--lambda", "2"]));
    assert_eq!(levels(&csv, "H"), vec![(0.0, 1), (2.0, 3), (6.0, 5)]);
    let csv = stdout(&run(&["spectrum", "--d", "2", "--lambda", "2"]));
    assert_eq!(levels(&csv, "H"), vec![(0.0, 1), (1.0, 2), (4.0, 2)]);
    let csv = stdout(&run(&["spectrum", "--d", "2", "--lambda", "1", "--k", "4"]));
    let r2 = levels(&csv, "R2");
    assert_eq!(r2.len(), 2);
    assert!((r2[0].0 - 0.5).abs() < 1e-14 && r2[0].1 == 2);
    assert!((r2[1].0 - 1.0).abs() < 1e-14 && r2[1].1 == 1);
}

#[test]
fn circle_sweep_is_monotone() {
    let o = run(&["converge", "--d", "2", "--lambda", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 8);
    let errs: Vec<f64> = rows.iter().map(|r| r["error"].as_f64().unwrap()).collect();
    assert!(errs.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn sphere_sweep_within_bound() {
    let o = run(&["converge", "--d", "3", "--phi", "wide", "--f", "gauss"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).skip(1).collect();
    assert_eq!(body.len(), 4);
    assert!(body.iter().all(|l| l.contains(",true,")));
}

#[test]
fn witnesses_report_closed_forms() {
    let o = run(&["converge", "--d", "2", "--table", "witness", "--lambda", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    for r in json(&o)["rows"].as_array().unwrap() {
        assert_eq!(r["witness"].as_f64().unwrap(), 1.0);
    }
    let o = run(&["converge", "--d", "3", "--table", "witness", "--lambda", "2", "--lambda-min", "2", "--format", "json"]);
    let rows = json(&o)["rows"].as_array().unwrap().clone();
    let get = |op: &str| rows.iter().find(|r| r["operator"] == op).unwrap().clone();
    assert!(get("x+")["witness"].as_f64().unwrap() >= (3.0f64 / 7.0).sqrt());
    assert!((get("x0")["printed_formula"].as_f64().unwrap() - (25.0f64 / 63.0).sqrt()).abs() < 1e-15);
    assert!(get("x0")["witness"].as_f64().unwrap() >= (1.0f64 / 3.0).sqrt());
}

#[test]
fn oracle_checks() {
    let o = run(&["oracle", "--check", "energies", "--d", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    for f in json(&o)["fits"].as_array().unwrap() {
        assert!((f["slope"].as_f64().unwrap() + 0.5).abs() <= 0.15);
    }
    let o = run(&["oracle", "--check", "cl", "--format", "json"]);
    let fits = json(&o)["fits"].as_array().unwrap().clone();
    assert_eq!(fits.len(), 1);
    assert!((fits[0]["slope"].as_f64().unwrap() + 1.5).abs() <= 0.2);
    let o = run(&["oracle", "--check", "tail", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    for t in json(&o)["tail"].as_array().unwrap() {
        assert!((t["ratio"].as_f64().unwrap() - 1.0).abs() < 1e-4);
    }
    // the J_2 and M_2 fits fail, so the full run reports a failure
    assert_eq!(run(&["oracle", "--check", "elements"]).status.code(), Some(1));
}

#[test]
fn csv_oracle_rows_have_five_columns() {
    let csv = stdout(&run(&["oracle", "--check", "energies", "--ks", "1e4,1e5,1e6"]));
    let body: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body[0], "k,quantity,exact,asymptotic,abs_diff");
    assert_eq!(body.len(), 1 + 3 * 4);
}

#[test]
fn dump_and_out_file() {
    let dir = std::env::temp_dir().join(format!("fuzzylab-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ops.csv");
    let o = run(&["dump", "--d", "2", "--lambda", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("operator,row,col,re,im\n"));
    assert!(text.lines().any(|l| l.starts_with("xi+,")));
    let h = stdout(&run(&["dump", "--d", "3", "--lambda", "1", "--what", "harmonics"]));
    assert!(h.contains("l,m,row,col,re,im\n"));
    assert_eq!(run(&["dump", "--d", "2", "--lambda", "1", "--what", "harmonics"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn seed_is_echoed() {
    let o = Command::new(env!("CARGO_BIN_EXE_fuzzylab"))
        .args(["verify", "--d", "2", "--lambda", "1"])
        .env("FUZZYLAB_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(json(&o)["config"]["seed"], "17");
}
