//! Pretty JSON with a fixed number of decimals for floats.
//!
//! serde_json prints the shortest round-trip form of each float, which makes
//! tables ragged and lets noise in the last bits leak into the output. Here
//! every float gets `precision` digits after the point, so an eigenvalue of
//! `1e-16` prints as zero.

use serde::Serialize;
use serde_json::Value;

pub fn to_string<T: Serialize>(value: &T, precision: usize) -> serde_json::Result<String> {
    let v = serde_json::to_value(value)?;
    let mut out = String::new();
    write_value(&mut out, &v, precision, 0);
    out.push('\n');
    Ok(out)
}

pub fn format_float(x: f64, precision: usize) -> String {
    if !x.is_finite() {
        return "null".into();
    }
    let s = format!("{x:.precision$}");
    // no negative zero
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_owned(),
        _ => s,
    }
}

fn indent(out: &mut String, depth: usize) {
    out.push('\n');
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, precision: usize, depth: usize) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(num) => match num.as_f64() {
            Some(x) if num.is_f64() => out.push_str(&format_float(x, precision)),
            _ => out.push_str(&num.to_string()),
        },
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        // short scalar rows (edges, matrix rows) stay on one line
        Value::Array(items) if items.iter().all(is_scalar) && items.len() <= 16 => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_value(out, item, precision, depth);
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                indent(out, depth + 1);
                write_value(out, item, precision, depth + 1);
            }
            indent(out, depth);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push('{');
            for (i, (k, item)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                indent(out, depth + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, item, precision, depth + 1);
            }
            indent(out, depth);
            out.push('}');
        }
    }
}
