//! Reports and their json, csv and pretty renderings.

use num_rational::BigRational;
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "hecke-covers/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// How a successful run should exit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Complete,
    /// Output was produced but a series did not converge or a cap was hit.
    Incomplete,
}

/// Rows of a table, one cell per column, already formatted.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub fields: Map<String, Value>,
    pub table: Table,
    pub outcome: Outcome,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("schema".into(), json!(SCHEMA));
        fields.insert("command".into(), json!(command));
        Self {
            fields,
            table: Table::default(),
            outcome: Outcome::Complete,
        }
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.fields.insert(key.into(), value);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&Value::Object(self.fields.clone()))
                    .expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => render_csv(&self.table),
            Format::Pretty => self.render_pretty(),
        }
    }

    fn render_pretty(&self) -> String {
        let mut out = String::new();
        let width = self.fields.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in &self.fields {
            if matches!(v, Value::Array(a) if a.iter().any(|x| x.is_object())) {
                continue;
            }
            out.push_str(&format!("{k:<width$}  {}\n", plain(v)));
        }
        if !self.table.columns.is_empty() {
            out.push('\n');
            out.push_str(&render_aligned(&self.table));
        }
        out
    }
}

/// `{"num": "...", "den": "..."}`.
pub fn rational(r: &BigRational) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

pub fn rationals(rs: &[BigRational]) -> Value {
    Value::Array(rs.iter().map(rational).collect())
}

/// `a/b`, or `a` when the denominator is 1.
pub fn rational_text(r: &BigRational) -> String {
    r.to_string()
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Object(m) if m.contains_key("num") && m.contains_key("den") => {
            let num = m["num"].as_str().unwrap_or_default();
            let den = m["den"].as_str().unwrap_or_default();
            if den == "1" {
                num.to_string()
            } else {
                format!("{num}/{den}")
            }
        }
        Value::Array(a) => {
            let parts: Vec<String> = a.iter().map(plain).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(table: &Table) -> String {
    let mut out = String::new();
    let line = |cells: &[String]| cells.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(",");
    out.push_str(&line(&table.columns));
    out.push('\n');
    for row in &table.rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

fn render_aligned(table: &Table) -> String {
    let mut widths: Vec<usize> = table.columns.iter().map(String::len).collect();
    for row in &table.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&table.columns);
    out.push_str(&line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
    for row in &table.rows {
        out.push_str(&line(row));
    }
    out
}
