//! Machine-readable run reports and their JSON / CSV / text renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::discrepancy::{self, Discrepancy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format `{other}` (expected json, csv or text)")),
        }
    }
}

/// A header plus rows of already-formatted cells.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    fn to_text(&self) -> String {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|i| {
                self.rows
                    .iter()
                    .filter_map(|r| r.get(i))
                    .chain(std::iter::once(&self.header[i]))
                    .map(|c| c.chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            let _ = writeln!(out, "  {}", line.join("  ").trim_end());
        }
        out
    }
}

/// Output of one CLI command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub seed: Option<u64>,
    /// Resolved inputs, defaults materialised.
    pub inputs: Value,
    pub results: Value,
    pub discrepancies: Vec<Discrepancy>,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        RunReport {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
            inputs,
            results,
            discrepancies: Vec::new(),
            table: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_discrepancies(mut self, d: Vec<Discrepancy>) -> Self {
        self.discrepancies = d;
        self
    }

    pub fn with_table(mut self, t: Table) -> Self {
        self.table = Some(t);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut out = match &self.table {
                    Some(t) => t.to_csv(),
                    None => {
                        let mut t = Table::new(["key", "value"]);
                        for (k, v) in flatten(&self.results) {
                            t.push(vec![k, v]);
                        }
                        t.to_csv()
                    }
                };
                if !self.discrepancies.is_empty() {
                    out.push('\n');
                    out.push_str(&discrepancy::to_csv(&self.discrepancies));
                }
                out
            }
            Format::Text => {
                let mut out = format!("{} (cosmic-bell {})\n", self.command, self.version);
                if let Some(seed) = self.seed {
                    let _ = writeln!(out, "seed: {seed}");
                }
                out.push_str("inputs:\n");
                for (k, v) in flatten(&self.inputs) {
                    let _ = writeln!(out, "  {k} = {v}");
                }
                out.push_str("results:\n");
                for (k, v) in flatten(&self.results) {
                    if !v.is_empty() {
                        let _ = writeln!(out, "  {k} = {v}");
                    }
                }
                if let Some(t) = &self.table {
                    out.push_str("table:\n");
                    out.push_str(&t.to_text());
                }
                if !self.discrepancies.is_empty() {
                    out.push_str("discrepancies (quoted vs computed):\n");
                    for d in &self.discrepancies {
                        let _ = writeln!(
                            out,
                            "  {:<34} {:<24} quoted {:e}  computed {:e}  rel.diff {:.3e}",
                            d.claim_id, d.paper_location, d.paper_value, d.computed_value, d.relative_difference
                        );
                    }
                }
                out
            }
        }
    }
}

/// Scalar leaves of a JSON value as `(dotted.path, value)`; arrays of
/// objects are skipped (they are rendered as tables).
pub fn flatten(value: &Value) -> Vec<(String, String)> {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, child, out);
                }
            }
            Value::Array(items) if items.iter().any(|i| i.is_object()) => {}
            Value::Array(items) => {
                let cells: Vec<String> = items.iter().map(scalar).collect();
                out.push((prefix.to_string(), format!("[{}]", cells.join(", "))));
            }
            other => out.push((prefix.to_string(), scalar(other))),
        }
    }
    let mut out = Vec::new();
    walk("", value, &mut out);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "null".into(),
        other => other.to_string(),
    }
}

/// Compact float formatting for table cells.
pub fn num(v: f64) -> String {
    if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:e}")
    }
}
