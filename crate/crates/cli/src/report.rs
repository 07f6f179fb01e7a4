use serde::Serialize;
use serde_json::{json, Value};

/// One pass/fail check carried in a report; the exit code is the conjunction.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    /// `value <= tol`.
    pub fn at_most(name: &str, value: f64, tol: f64) -> Self {
        Self { name: name.into(), value, tol, pass: value <= tol }
    }

    pub fn flag(name: &str, pass: bool) -> Self {
        Self { name: name.into(), value: if pass { 1.0 } else { 0.0 }, tol: 1.0, pass }
    }
}

/// Rectangular output for `--format csv`.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }
}

pub struct Outcome {
    pub results: Value,
    pub table: Table,
    pub checks: Vec<Check>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// The JSON document: command, config echo, results, provenance. Timing is
/// deliberately absent so identical inputs give identical bytes.
pub fn render_json(command: &str, config: &Value, outcome: &Outcome, seed: u64, tolerances: Value) -> String {
    let doc = json!({
        "command": command,
        "config": config,
        "results": {
            "data": outcome.results,
            "checks": outcome.checks,
            "passed": outcome.passed(),
        },
        "provenance": {
            "package": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "library": "zwdpp",
            "seed": seed,
            "tolerances": tolerances,
        },
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn fmt_f(x: f64) -> String {
    format!("{x:.17e}")
}
