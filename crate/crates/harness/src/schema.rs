//! Validation of report files against the bundled schema.
//!
//! The schema uses a small subset of JSON Schema: `type` (single or list),
//! `required`, `properties`, `additionalProperties: false`, `minimum` and
//! `maximum`. Numbers must be finite.

use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{HarnessError, Result};

pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

fn schema_for(section: &str) -> Value {
    let all: Value = serde_json::from_str(REPORT_SCHEMA).expect("bundled schema is valid JSON");
    all[section].clone()
}

fn type_matches(ty: &str, v: &Value) -> bool {
    match ty {
        "object" => v.is_object(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        "integer" => v.is_u64() || v.is_i64(),
        "number" => v.as_f64().is_some_and(f64::is_finite),
        "string" => v.is_string(),
        _ => false,
    }
}

/// Checks `value` against `schema`, returning the first violation.
pub fn validate_value(schema: &Value, value: &Value) -> std::result::Result<(), String> {
    let types: Vec<&str> = match &schema["type"] {
        Value::String(s) => vec![s.as_str()],
        Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
        _ => vec![],
    };
    if !types.is_empty() && !types.iter().any(|t| type_matches(t, value)) {
        return Err(format!("{value} is not of type {types:?}"));
    }
    if let Some(x) = value.as_f64() {
        if !x.is_finite() {
            return Err(format!("{x} is not finite"));
        }
        if schema["minimum"].as_f64().is_some_and(|m| x < m) {
            return Err(format!("{x} is below the minimum {}", schema["minimum"]));
        }
        if schema["maximum"].as_f64().is_some_and(|m| x > m) {
            return Err(format!("{x} is above the maximum {}", schema["maximum"]));
        }
    }
    if let Value::Object(obj) = value {
        let empty = Map::new();
        let props = schema["properties"].as_object().unwrap_or(&empty);
        for key in schema["required"].as_array().into_iter().flatten().filter_map(Value::as_str) {
            if !obj.contains_key(key) {
                return Err(format!("missing field {key}"));
            }
        }
        for (key, v) in obj {
            match props.get(key) {
                Some(sub) => validate_value(sub, v).map_err(|e| format!("{key}: {e}"))?,
                None if schema["additionalProperties"] == Value::Bool(false) => {
                    return Err(format!("unexpected field {key}"))
                }
                None => {}
            }
        }
    }
    Ok(())
}

/// Validates every line of a JSON-lines record file.
pub fn validate_records(text: &str) -> std::result::Result<usize, String> {
    let schema = schema_for("records");
    let mut count = 0;
    for (i, line) in text.lines().enumerate() {
        let v: Value = serde_json::from_str(line).map_err(|e| format!("line {}: {e}", i + 1))?;
        validate_value(&schema, &v).map_err(|e| format!("line {}: {e}", i + 1))?;
        count += 1;
    }
    Ok(count)
}

/// Validates a summary CSV: the header must list exactly the schema's
/// fields, and each cell must parse as the declared type.
pub fn validate_summary(text: &str) -> std::result::Result<usize, String> {
    let schema = schema_for("summary");
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().map_err(|e| e.to_string())?.iter().map(String::from).collect();
    let required: Vec<&str> = schema["required"].as_array().unwrap().iter().filter_map(Value::as_str).collect();
    if header != required {
        return Err(format!("header {header:?} does not match {required:?}"));
    }
    let mut count = 0;
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| e.to_string())?;
        let mut obj = Map::new();
        for (key, cell) in header.iter().zip(rec.iter()) {
            let v = serde_json::from_str::<Value>(cell).map_err(|_| format!("row {}: {key} = {cell:?}", i + 1))?;
            obj.insert(key.clone(), v);
        }
        validate_value(&schema, &Value::Object(obj)).map_err(|e| format!("row {}: {e}", i + 1))?;
        count += 1;
    }
    Ok(count)
}

/// Validates a written report directory; returns `(records, summary rows)`.
pub fn validate_report_dir(dir: &Path, records: &str, summary: &str) -> Result<(usize, usize)> {
    let read = |name: &str| {
        let p = dir.join(name);
        std::fs::read_to_string(&p).map_err(|e| HarnessError::io(&p, e))
    };
    let r = validate_records(&read(records)?).map_err(HarnessError::Config)?;
    let s = validate_summary(&read(summary)?).map_err(HarnessError::Config)?;
    Ok((r, s))
}
