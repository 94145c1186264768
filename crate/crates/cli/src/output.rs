//! Output rendering: JSON (default), aligned plain text, and CSV for
//! tabular commands. Everything printed is deterministic; no timestamps
//! and no floating point anywhere.

use gwcalc_core::{Int, Rational};
use serde_json::{Map, Value};

/// Result of one executed subcommand. `result` is what JSON mode prints;
/// the optional table backs the CSV rendering.
pub struct CommandResult {
    pub command: &'static str,
    pub parameters: Vec<(&'static str, String)>,
    pub result: Value,
    /// Always true: every computation is exact.
    pub exact: bool,
    pub table: Option<Table>,
}

pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl CommandResult {
    pub fn new(command: &'static str, parameters: Vec<(&'static str, String)>, result: Value) -> Self {
        CommandResult {
            command,
            parameters,
            result,
            exact: true,
            table: None,
        }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }
}

/// Arbitrary-precision integer as a JSON number (the arbitrary_precision
/// feature keeps full precision in the serialized bytes).
pub fn int_value(n: &Int) -> Value {
    let number: serde_json::Number = n.to_string().parse().expect("integer literal");
    Value::Number(number)
}

pub fn i64_value(n: i64) -> Value {
    Value::Number(n.into())
}

/// Rational as {"num": "...", "den": "..."} with decimal strings.
pub fn rational_value(r: &Rational) -> Value {
    let mut m = Map::new();
    m.insert("num".into(), Value::String(r.numer().to_string()));
    m.insert("den".into(), Value::String(r.denom().to_string()));
    Value::Object(m)
}

pub fn render_json(res: &CommandResult) -> String {
    let mut s = serde_json::to_string(&res.result).expect("serializable");
    s.push('\n');
    s
}

pub fn render_text(res: &CommandResult) -> String {
    let mut out = String::new();
    out.push_str(res.command);
    for (k, v) in &res.parameters {
        out.push_str(&format!(" {k}={v}"));
    }
    if res.exact {
        out.push_str(" (exact)");
    }
    out.push('\n');
    if let Some(table) = &res.table {
        render_text_table(table, &mut out);
    } else {
        render_text_value(&res.result, 0, &mut out);
    }
    out
}

fn render_text_table(table: &Table, out: &mut String) {
    let mut widths: Vec<usize> = table.headers.iter().map(|h| h.len()).collect();
    for row in &table.rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.len());
        }
    }
    let mut line = String::new();
    for (k, h) in table.headers.iter().enumerate() {
        line.push_str(&format!("{:>width$}  ", h, width = widths[k]));
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for row in &table.rows {
        let mut line = String::new();
        for (k, cell) in row.iter().enumerate() {
            line.push_str(&format!("{:>width$}  ", cell, width = widths[k]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

fn render_text_value(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, v) in map {
                if v.is_object() || v.is_array() {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text_value(v, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k:<width$}  {}\n", scalar_text(v)));
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                if v.is_object() || v.is_array() {
                    out.push_str(&format!("{pad}-\n"));
                    render_text_value(v, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(v)));
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar_text(value))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn render_csv(table: &Table) -> String {
    let mut out = String::new();
    out.push_str(&table.headers.join(","));
    out.push('\n');
    for row in &table.rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
