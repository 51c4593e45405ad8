//! Deterministic JSON rendering: sorted keys, floats at 17 significant digits.

use serde_json::Value;

pub fn render(v: &Value, compact: bool) -> String {
    let mut out = String::new();
    write_value(&mut out, v, compact, 0);
    out.push('\n');
    out
}

/// `{:.16e}` keeps 17 significant digits, enough to round-trip any `f64`.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn newline(out: &mut String, compact: bool, depth: usize) {
    if !compact {
        out.push('\n');
        for _ in 0..depth {
            out.push_str("  ");
        }
    }
}

fn write_value(out: &mut String, v: &Value, compact: bool, depth: usize) {
    match v {
        Value::Null | Value::Bool(_) | Value::String(_) => out.push_str(&v.to_string()),
        Value::Number(n) => match (n.as_i64(), n.as_u64(), n.as_f64()) {
            (Some(i), _, _) => out.push_str(&i.to_string()),
            (_, Some(u), _) => out.push_str(&u.to_string()),
            (_, _, Some(f)) => out.push_str(&format_f64(f)),
            _ => out.push_str(&n.to_string()),
        },
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                newline(out, compact, depth + 1);
                write_value(out, item, compact, depth + 1);
            }
            newline(out, compact, depth);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push('{');
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            for (i, k) in keys.into_iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                newline(out, compact, depth + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push(':');
                if !compact {
                    out.push(' ');
                }
                write_value(out, &map[k], compact, depth + 1);
            }
            newline(out, compact, depth);
            out.push('}');
        }
    }
}
