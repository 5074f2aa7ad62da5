use linalg_core::{fmt17, CheckSet};
use serde_json::{json, Map, Number, Value};

use crate::args::Format;

/// Finished command output and whether every check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub pass: bool,
}

/// Echo of the parsed configuration, in insertion order.
#[derive(Debug, Clone, Default)]
pub struct Config(pub Vec<(String, String)>);

impl Config {
    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.0.push((key.to_string(), value.to_string()));
    }

    pub fn csv_header(&self) -> String {
        self.0.iter().map(|(k, v)| format!("# {k}={v}\n")).collect()
    }

    pub fn json(&self) -> Value {
        let map: Map<String, Value> = self.0.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        Value::Object(map)
    }
}

/// A JSON number printed with 17 significant digits; null when not finite.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(fmt17(x).parse::<Number>().expect("fmt17 output is a JSON number"))
}

pub fn to_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn checks_report(command: &str, config: &Config, checks: &CheckSet, format: Format) -> Report {
    let pass = checks.all_pass();
    let text = match format {
        Format::Json => {
            let records: Vec<Value> = checks
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "label": c.label,
                        "residual": num(c.residual),
                        "tolerance": num(c.tolerance),
                        "pass": c.pass(),
                    })
                })
                .collect();
            to_text(&json!({
                "command": command,
                "config": config.json(),
                "checks": records,
                "total": checks.checks.len(),
                "failed": checks.failures().len(),
                "all_pass": pass,
            }))
        }
        Format::Csv => {
            let mut out = config.csv_header();
            out.push_str("name,label,residual,tolerance,pass\n");
            for c in &checks.checks {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    csv_field(&c.name),
                    csv_field(&c.label),
                    fmt17(c.residual),
                    fmt17(c.tolerance),
                    c.pass()
                ));
            }
            out
        }
    };
    Report { text, pass }
}

/// Quotes a field that contains a comma or a quote.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use linalg_core::Check;

    #[test]
    fn numbers_keep_seventeen_digits() {
        assert_eq!(num(0.1).to_string(), "1.0000000000000001e-1");
        assert_eq!(num(0.0).to_string(), "0");
        assert_eq!(num(f64::NAN), Value::Null);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("[L, xi]"), "\"[L, xi]\"");
        assert_eq!(csv_field("R^2"), "R^2");
    }

    #[test]
    fn check_report_counts_failures() {
        let mut set = CheckSet::default();
        set.push(Check::new("a", "x", 1e-15, 1e-12));
        set.push(Check::new("b", "y", 1.0, 1e-12));
        let mut cfg = Config::default();
        cfg.push("d", 2);
        let r = checks_report("verify", &cfg, &set, Format::Json);
        assert!(!r.pass);
        let v: Value = serde_json::from_str(&r.text).unwrap();
        assert_eq!(v["failed"], 1);
        assert_eq!(v["config"]["d"], "2");
        let csv = checks_report("verify", &cfg, &set, Format::Csv).text;
        assert!(csv.starts_with("# d=2\nname,label,residual,tolerance,pass\n"));
    }
}
