//! Reports are built as JSON; the text format is rendered from it.

use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// Starts a report object with the common header fields.
pub fn header(command: &str, polytope: Option<&str>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema_version".into(), SCHEMA_VERSION.into());
    m.insert("command".into(), command.into());
    if let Some(name) = polytope {
        m.insert("polytope".into(), name.into());
    }
    m
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn write_entries(out: &mut String, map: &Map<String, Value>, indent: usize, first_prefix: Option<&str>) {
    for (i, (key, value)) in map.iter().enumerate() {
        let pad = match (i, first_prefix) {
            (0, Some(p)) => format!("{}{p}", " ".repeat(indent - p.len())),
            _ => " ".repeat(indent),
        };
        write_value(out, &pad, indent, key, value);
    }
}

fn write_value(out: &mut String, pad: &str, indent: usize, key: &str, value: &Value) {
    if let Some(s) = scalar(value) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match value {
        Value::Object(m) => write_entries(out, m, indent + 2, None),
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(m) if !m.is_empty() => write_entries(out, m, indent + 4, Some("- ")),
                    other => {
                        let s = scalar(other).unwrap_or_else(|| other.to_string());
                        out.push_str(&format!("{}- {s}\n", " ".repeat(indent + 2)));
                    }
                }
            }
        }
        _ => unreachable!(),
    }
}

/// Indented `key: value` lines; nested arrays of objects become `-` items.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    match report {
        Value::Object(m) => write_entries(&mut out, m, 0, None),
        other => out.push_str(&scalar(other).unwrap_or_else(|| other.to_string())),
    }
    out
}
