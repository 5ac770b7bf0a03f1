//! Report model: JSON `{config, results, residuals, pass}` or CSV tables.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;

#[derive(Debug, Serialize)]
pub struct Entry {
    pub name: String,
    pub value: Value,
    /// `None` for reported quantities that are not checked.
    pub tolerance: Option<f64>,
    pub pass: bool,
}

#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub results: Vec<Entry>,
    pub residuals: BTreeMap<String, f64>,
    pub pass: bool,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl Report {
    pub fn new(config: RunConfig) -> Self {
        Self { config, results: Vec::new(), residuals: BTreeMap::new(), pass: true, table: None }
    }

    pub fn info(&mut self, name: impl Into<String>, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("serializable");
        self.results.push(Entry { name: name.into(), value, tolerance: None, pass: true });
    }

    /// A residual that must not exceed `tolerance`.
    pub fn check(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) {
        let name = name.into();
        let pass = residual <= tolerance;
        self.pass &= pass;
        self.residuals.insert(name.clone(), residual);
        self.results.push(Entry { name, value: residual.into(), tolerance: Some(tolerance), pass });
    }

    /// A value with its own pass condition (positivity, exact equality).
    pub fn check_value(&mut self, name: impl Into<String>, value: impl Serialize, tolerance: f64, pass: bool) {
        self.pass &= pass;
        let value = serde_json::to_value(value).expect("serializable");
        self.results.push(Entry { name: name.into(), value, tolerance: Some(tolerance), pass });
    }

    pub fn write(&self, out: &mut dyn Write) -> std::io::Result<()> {
        match (self.config.out, &self.table) {
            (crate::config::Output::Csv, Some(t)) => write_table(t, out),
            (crate::config::Output::Csv, None) => write_results(&self.results, out),
            (crate::config::Output::Json, _) => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
        }
    }
}

fn write_table(t: &Table, out: &mut dyn Write) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&t.header)?;
    for row in &t.rows {
        w.write_record(row.iter().map(|x| format!("{:e}", x + 0.0)))?;
    }
    w.flush()
}

fn write_results(results: &[Entry], out: &mut dyn Write) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["name", "value", "tolerance", "pass"])?;
    for e in results {
        let tol = e.tolerance.map(|t| format!("{t:e}")).unwrap_or_default();
        let value = match &e.value {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        w.write_record([e.name.clone(), value, tol, e.pass.to_string()])?;
    }
    w.flush()
}
