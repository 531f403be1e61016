//! Report serialization. JSON objects use serde_json's sorted map, so key
//! order is fixed; counts are decimal strings.

use constacode::linear_code::{BoundCheck, Optimality, WeightEnumerator};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// `[[w, "count"], ...]`, ascending weight.
pub fn enumerator(w: &WeightEnumerator) -> Value {
    Value::Array(w.to_pairs().into_iter().map(|(w, c)| json!([w, c])).collect())
}

pub fn opt_enumerator(w: Option<&WeightEnumerator>) -> Value {
    w.map(enumerator).unwrap_or(Value::Null)
}

pub fn bound_check(b: &BoundCheck) -> Value {
    json!({
        "bound": b.bound,
        "params": [b.params.0, b.params.1, b.params.2],
        "satisfied": b.satisfied,
        "inequality": b.inequality,
    })
}

pub fn optimality(o: &Optimality) -> Value {
    json!({
        "distance_optimal": o.distance_optimal(),
        "dimension_optimal": o.dimension_optimal(),
        "evaluated": o.evaluated.iter().map(bound_check).collect::<Vec<_>>(),
    })
}

/// Leaves of a JSON value as `path,value` rows, in key order.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Prints a report: pretty JSON, or `key,value` rows for CSV.
pub fn emit(format: Format, report: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).expect("serializable")),
        Format::Csv => {
            let mut rows = Vec::new();
            flatten("", report, &mut rows);
            println!("key,value");
            for (k, v) in rows {
                println!("{},{}", csv_field(&k), csv_field(&v));
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Prints a table: the `meta` object with a `rows` array for JSON, or a
/// header line and one line per row for CSV.
pub fn emit_table(format: Format, meta: Value, header: &[&str], rows: &[Vec<Value>]) {
    match format {
        Format::Json => {
            let mut obj = meta;
            let list: Vec<Value> = rows
                .iter()
                .map(|r| Value::Object(header.iter().map(|h| h.to_string()).zip(r.iter().cloned()).collect()))
                .collect();
            obj["rows"] = Value::Array(list);
            emit(Format::Json, &obj);
        }
        Format::Csv => {
            println!("{}", header.join(","));
            for r in rows {
                println!("{}", r.iter().map(|x| csv_field(&cell(x))).collect::<Vec<_>>().join(","));
            }
        }
    }
}
