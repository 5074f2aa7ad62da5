use linalg_core::fmt17;

/// One Λ of a strong-convergence sweep. `bound` bounds `error` directly
/// (the square root of the squared bound).
#[derive(Debug, Clone, PartialEq)]
pub struct DecayRow {
    pub lambda: usize,
    pub k: f64,
    pub error: f64,
    pub bound: f64,
    /// k is below the schedule the bound was proved for.
    pub below_schedule: bool,
    /// Coefficients of f above degree 2Λ were dropped from f̂_Λ.
    pub dropped_terms: bool,
}

impl DecayRow {
    pub fn pass(&self) -> bool {
        self.error <= self.bound
    }

    pub fn warning(&self) -> String {
        let mut tags = Vec::new();
        if self.below_schedule {
            tags.push("below-schedule");
        }
        if self.dropped_terms {
            tags.push("dropped-terms");
        }
        tags.join(";")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayTable {
    pub label: String,
    pub schedule: String,
    pub rows: Vec<DecayRow>,
}

impl DecayTable {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(DecayRow::pass)
    }

    /// Errors strictly decrease along the rows.
    pub fn is_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].error < w[0].error)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,k,error,bound,pass,warning\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.lambda,
                fmt17(r.k),
                fmt17(r.error),
                fmt17(r.bound),
                r.pass(),
                r.warning()
            ));
        }
        out
    }
}

/// `‖(f̂_Λ ĝ_Λ − (fg)·)φ‖` and `‖[f̂_Λ, ĝ_Λ]φ‖` at one Λ.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductRow {
    pub lambda: usize,
    pub k: f64,
    pub product_error: f64,
    pub commutator: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductTable {
    pub label: String,
    pub schedule: String,
    pub rows: Vec<ProductRow>,
}

impl ProductTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,k,product_error,commutator\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{}\n", r.lambda, fmt17(r.k), fmt17(r.product_error), fmt17(r.commutator)));
        }
        out
    }
}

/// `‖f̂_Λ‖_op` against `3‖f‖_∞`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormRow {
    pub lambda: usize,
    pub k: f64,
    pub norm: f64,
    pub bound: f64,
    pub below_schedule: bool,
}

impl NormRow {
    pub fn pass(&self) -> bool {
        self.norm <= self.bound
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormTable {
    pub label: String,
    pub schedule: String,
    pub rows: Vec<NormRow>,
}

impl NormTable {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(NormRow::pass)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,k,norm,bound,pass,warning\n");
        for r in &self.rows {
            let tag = if r.below_schedule { "below-schedule" } else { "" };
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.lambda,
                fmt17(r.k),
                fmt17(r.norm),
                fmt17(r.bound),
                r.pass(),
                tag
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(lambda: usize, error: f64, bound: f64) -> DecayRow {
        DecayRow { lambda, k: 36.0, error, bound, below_schedule: false, dropped_terms: false }
    }

    #[test]
    fn csv_layout_and_flags() {
        let mut t = DecayTable { label: "x".into(), schedule: "default".into(), rows: vec![row(1, 0.5, 1.0), row(2, 0.25, 0.2)] };
        assert!(t.is_decreasing());
        assert!(!t.all_pass());
        t.rows[1].below_schedule = true;
        t.rows[1].dropped_terms = true;
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "lambda,k,error,bound,pass,warning");
        assert_eq!(lines[1], "1,3.6000000000000000e1,5.0000000000000000e-1,1.0000000000000000e0,true,");
        assert!(lines[2].ends_with("false,below-schedule;dropped-terms"));
    }
}
