//! Output documents: structured JSON by default, an optional plain table.
//!
//! Verbs that produce a matrix put `n`, `mode`, and `entries` at the top
//! level, so their output parses as a matrix input file again.

use serde_json::{json, Map, Value};
use tracekit::{Field, Mode, Scalar, SquareMatrix};

use crate::input::InputEcho;

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(r) => Value::String(r.to_string()),
        Scalar::Real(x) => {
            serde_json::Number::from_f64(*x).map_or_else(|| json!(x.to_string()), Value::Number)
        }
        Scalar::Complex(z) => json!([z.re, z.im]),
    }
}

pub fn field_to_json<K: Field>(k: &K) -> Value {
    scalar_to_json(&k.to_scalar())
}

pub fn norm_to_json<K: Field>(norm: &K::Norm) -> Value {
    scalar_to_json(&K::norm_scalar(norm))
}

pub fn matrix_to_json<K: Field>(m: &SquareMatrix<K>) -> Value {
    Value::Array(
        m.rows()
            .map(|row| Value::Array(row.iter().map(field_to_json).collect()))
            .collect(),
    )
}

/// Max-norm of a matrix as JSON; the scalar type is inferred from the matrix.
pub fn matrix_max_norm_json<K: Field>(m: &SquareMatrix<K>) -> Value {
    norm_to_json::<K>(&m.max_norm())
}

/// A `(order, error)` report as JSON records. The matrix argument only pins
/// the scalar type, which cannot be inferred from the norms alone.
pub fn report_to_json<K: Field>(
    _type_witness: &SquareMatrix<K>,
    report: &[(usize, K::Norm)],
) -> Value {
    Value::Array(
        report
            .iter()
            .map(|(order, error)| json!({ "order": order, "error": norm_to_json::<K>(error) }))
            .collect(),
    )
}

/// One command's result document.
#[derive(Debug, Clone)]
pub struct Document {
    fields: Map<String, Value>,
}

impl Document {
    pub fn new(verb: &str, mode: Mode) -> Self {
        let mut fields = Map::new();
        fields.insert("verb".into(), json!(verb));
        fields.insert("mode".into(), json!(mode.as_str()));
        Document { fields }
    }

    pub fn insert(&mut self, key: &str, value: Value) -> &mut Self {
        self.fields.insert(key.into(), value);
        self
    }

    pub fn echo_input(&mut self, input: &InputEcho) -> &mut Self {
        self.insert(
            "input",
            json!({ "path": input.path, "sha256": input.sha256 }),
        )
    }

    /// Top-level `n` + `entries`, making the document a valid matrix file.
    pub fn embed_matrix<K: Field>(&mut self, m: &SquareMatrix<K>) -> &mut Self {
        self.insert("n", json!(m.dim()));
        self.insert("entries", matrix_to_json(m))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&Value::Object(self.fields.clone()))
            .expect("documents are plain JSON")
    }

    /// Plain-text rendering for terminals; JSON stays the canonical format.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let mut push_line = |line: String| {
            out.push_str(&line);
            out.push('\n');
        };

        for key in ["verb", "mode"] {
            if let Some(Value::String(v)) = self.fields.get(key) {
                push_line(format!("{key}: {v}"));
            }
        }
        if let Some(input) = self.fields.get("input") {
            if let (Some(path), Some(digest)) = (
                input.get("path").and_then(Value::as_str),
                input.get("sha256").and_then(Value::as_str),
            ) {
                push_line(format!("input: {path} (sha256 {digest})"));
            }
        }

        for (key, value) in &self.fields {
            match (key.as_str(), value) {
                ("verb" | "mode" | "input" | "n", _) => {}
                ("entries", Value::Array(rows)) => {
                    push_line("entries:".into());
                    for line in render_grid(rows) {
                        push_line(format!("  {line}"));
                    }
                }
                ("coefficients", Value::Array(items)) => {
                    push_line("coefficients:".into());
                    for (k, item) in items.iter().enumerate() {
                        push_line(format!("  D{}  {}", k + 1, render_value(item)));
                    }
                }
                ("traces", Value::Array(items)) => {
                    push_line("traces:".into());
                    for (k, item) in items.iter().enumerate() {
                        push_line(format!("  T{}  {}", k + 1, render_value(item)));
                    }
                }
                ("report", Value::Array(records)) => {
                    push_line("order  error".into());
                    for record in records {
                        let order = record.get("order").map(render_value).unwrap_or_default();
                        let error = record.get("error").map(render_value).unwrap_or_default();
                        push_line(format!("{order:>5}  {error}"));
                    }
                }
                ("terms", Value::Array(records)) => {
                    push_line("coefficient  monomial".into());
                    for record in records {
                        let coefficient = record
                            .get("coefficient")
                            .map(render_value)
                            .unwrap_or_default();
                        let monomial = record
                            .get("partition")
                            .map(render_monomial)
                            .unwrap_or_default();
                        push_line(format!("{coefficient:>11}  {monomial}"));
                    }
                }
                (_, Value::Object(nested)) if nested.contains_key("entries") => {
                    push_line(format!("{key}:"));
                    if let Some(Value::Array(rows)) = nested.get("entries") {
                        for line in render_grid(rows) {
                            push_line(format!("  {line}"));
                        }
                    }
                }
                (_, Value::Array(rows)) if rows.iter().all(Value::is_array) => {
                    push_line(format!("{key}:"));
                    for line in render_grid(rows) {
                        push_line(format!("  {line}"));
                    }
                }
                (_, other) => push_line(format!("{key}: {}", render_value(other))),
            }
        }
        out
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(pair) if pair.len() == 2 && pair.iter().all(Value::is_number) => {
            // Complex scalar.
            format!(
                "{}{:+}i",
                render_value(&pair[0]),
                pair[1].as_f64().unwrap_or(0.0)
            )
        }
        other => other.to_string(),
    }
}

/// Column-aligned rendering of a grid of scalars.
fn render_grid(rows: &[Value]) -> Vec<String> {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| match row {
            Value::Array(items) => items.iter().map(render_value).collect(),
            other => vec![render_value(other)],
        })
        .collect();
    let columns = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            cells
                .iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    cells
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(c, cell)| format!("{cell:>width$}", width = widths[c]))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect()
}

fn render_monomial(partition: &Value) -> String {
    let Some(pairs) = partition.as_array() else {
        return partition.to_string();
    };
    pairs
        .iter()
        .filter_map(|pair| {
            let j = pair.get(0)?.as_u64()?;
            let a = pair.get(1)?.as_u64()?;
            Some(if a == 1 {
                format!("T{j}")
            } else {
                format!("T{j}^{a}")
            })
        })
        .collect::<Vec<_>>()
        .join("*")
}
