//! Text rendering of JSON reports.

use serde_json::{Map, Value};

pub fn text(report: &Value) -> String {
    let mut out = String::new();
    block(report, 0, &mut out);
    out
}

fn pad(depth: usize) -> String {
    "  ".repeat(depth)
}

fn block(v: &Value, depth: usize, out: &mut String) {
    match v {
        Value::Object(map) if is_physics(map) => physics(map, depth, out),
        Value::Object(map) => {
            if let Some(Value::String(s)) = map.get("summary") {
                out.push_str(&format!("{}{s}\n", pad(depth)));
            }
            for (key, value) in map.iter().filter(|(k, _)| k.as_str() != "summary") {
                entry(key, value, depth, out);
            }
        }
        other => out.push_str(&format!("{}{}\n", pad(depth), inline(other))),
    }
}

fn entry(key: &str, value: &Value, depth: usize, out: &mut String) {
    if is_flat(value) {
        out.push_str(&format!("{}{key}: {}\n", pad(depth), inline(value)));
        return;
    }
    out.push_str(&format!("{}{key}:\n", pad(depth)));
    match value {
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                entry(&format!("[{i}]"), item, depth + 1, out);
            }
        }
        other => block(other, depth + 1, out),
    }
}

/// Scalars and arrays without objects fit on one line.
fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(is_flat),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_physics(map: &Map<String, Value>) -> bool {
    map.contains_key("profile") && map.contains_key("inputs") && map.contains_key("outputs")
}

fn quantities(v: Option<&Value>) -> impl Iterator<Item = &Map<String, Value>> {
    v.and_then(Value::as_array).into_iter().flatten().filter_map(Value::as_object)
}

fn field<'a>(q: &'a Map<String, Value>, key: &str) -> &'a str {
    q.get(key).and_then(Value::as_str).unwrap_or("")
}

fn physics(map: &Map<String, Value>, depth: usize, out: &mut String) {
    let p = pad(depth);
    out.push_str(&format!(
        "{p}{} (constants: {})\n",
        map.get("name").and_then(Value::as_str).unwrap_or("report"),
        map.get("profile").and_then(Value::as_str).unwrap_or("?")
    ));
    for q in quantities(map.get("inputs")) {
        let v = q.get("value").and_then(Value::as_f64).unwrap_or(f64::NAN);
        out.push_str(&format!("{p}  {} = {v:e} {}\n", field(q, "name"), field(q, "unit")));
    }
    for note in map.get("notes").and_then(Value::as_array).into_iter().flatten() {
        out.push_str(&format!("{p}note: {}\n", inline(note)));
    }
    for q in quantities(map.get("outputs")) {
        let v = q.get("value").and_then(Value::as_f64).unwrap_or(f64::NAN);
        let unit = field(q, "unit");
        match q.get("exact").and_then(Value::as_str) {
            Some(exact) => out.push_str(&format!("{p}{} = {exact} {unit} (≈ {v:.2e})\n", field(q, "name"))),
            None => out.push_str(&format!("{p}{} ≈ {v:.2e} {unit}\n", field(q, "name"))),
        }
    }
}
