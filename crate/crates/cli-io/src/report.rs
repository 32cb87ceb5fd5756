//! Rendering of reports. Keys come out sorted, so equal reports are equal
//! byte for byte.

use serde_json::Value;

use crate::args::Format;

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("serializable report");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            flatten("", v, &mut s);
            s
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(" ")))
        }
        _ => None,
    }
}

fn flatten(path: &str, v: &Value, out: &mut String) {
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{path}: {s}\n"));
        return;
    }
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), x, out);
            }
        }
        _ => unreachable!(),
    }
}
