//! Text and JSON rendering of results.

use serde_json::{json, Value};
use talex_core::algebra::json::poly_to_json;
use talex_core::algebra::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A result as ordered `(key, value)` fields; rendered as `key: value`
/// lines or as one JSON object.
#[derive(Default)]
pub struct Record {
    fields: Vec<(String, Field)>,
}

pub enum Field {
    Poly(IntPoly),
    MaybePoly(Option<IntPoly>),
    Text(String),
    Bool(bool),
    MaybeBool(Option<bool>),
    Int(i64),
    Raw(Value),
}

impl Record {
    pub fn with(mut self, key: &str, value: Field) -> Self {
        self.fields.push((key.to_string(), value));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self
                .fields
                .iter()
                .map(|(k, v)| format!("{k}: {}", text(v)))
                .collect::<Vec<_>>()
                .join("\n"),
            Format::Json => {
                let map: serde_json::Map<String, Value> = self
                    .fields
                    .iter()
                    .map(|(k, v)| (k.clone(), json_value(v)))
                    .collect();
                serde_json::to_string_pretty(&Value::Object(map)).expect("JSON values serialize")
            }
        }
    }
}

fn text(f: &Field) -> String {
    match f {
        Field::Poly(p) => p.to_string(),
        Field::MaybePoly(p) => p.as_ref().map_or("none".into(), IntPoly::to_string),
        Field::Text(s) => s.clone(),
        Field::Bool(b) => b.to_string(),
        Field::MaybeBool(b) => b.map_or("n/a".into(), |b| b.to_string()),
        Field::Int(i) => i.to_string(),
        Field::Raw(v) => v.to_string(),
    }
}

fn json_value(f: &Field) -> Value {
    match f {
        Field::Poly(p) => poly_to_json(p),
        Field::MaybePoly(p) => p.as_ref().map_or(Value::Null, poly_to_json),
        Field::Text(s) => json!(s),
        Field::Bool(b) => json!(b),
        Field::MaybeBool(b) => json!(b),
        Field::Int(i) => json!(i),
        Field::Raw(v) => v.clone(),
    }
}
