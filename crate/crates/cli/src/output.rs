use num_bigint::BigInt;
use serde_json::Value;

#[derive(Debug, Clone, Copy)]
pub enum Format {
    Json,
    Table,
}

/// A big integer as a JSON number when it fits, else as a string.
pub fn big(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::from(v.to_string()),
    }
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("values serialize"),
        Format::Table => {
            let mut out = Vec::new();
            table(value, "", &mut out);
            out.join("\n")
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        _ => None,
    }
}

/// One `path  value` line per leaf; arrays of scalars are listed one item
/// per line under their key.
fn table(v: &Value, path: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                table(child, &p, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
            out.push(format!("{path}:"));
            out.extend(items.iter().map(|i| format!("  {}", scalar(i).unwrap())));
        }
        Value::Array(items) => {
            for (idx, child) in items.iter().enumerate() {
                table(child, &format!("{path}[{idx}]"), out);
            }
        }
        _ => out.push(format!("{path}: {}", scalar(v).unwrap())),
    }
}
