//! JSON layout: containers whose compact form fits on a line are printed
//! inline, larger ones are expanded with two-space indentation.

use serde::Serialize;
use serde_json::Value;

const INLINE_WIDTH: usize = 72;

pub fn to_json_text<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let v = serde_json::to_value(value)?;
    let mut out = String::new();
    write_value(&v, 0, &mut out)?;
    out.push('\n');
    Ok(out)
}

fn write_value(v: &Value, indent: usize, out: &mut String) -> serde_json::Result<()> {
    let compact = serde_json::to_string(v)?;
    let is_container = matches!(v, Value::Array(_) | Value::Object(_));
    if !is_container || compact.len() <= INLINE_WIDTH {
        out.push_str(&compact);
        return Ok(());
    }
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(item, indent + 1, out)?;
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&serde_json::to_string(k)?);
                out.push_str(": ");
                write_value(item, indent + 1, out)?;
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        _ => unreachable!(),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_containers_stay_inline() {
        let v = serde_json::json!({"a": [[1, 2], [3, 4]], "b": "x".repeat(80)});
        let text = to_json_text(&v).unwrap();
        assert!(text.contains("\"a\": [[1,2],[3,4]]"));
        assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), v);
    }
}
