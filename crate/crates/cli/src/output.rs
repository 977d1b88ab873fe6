use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::args::Format;

/// Integer emitted as a JSON number when it fits in `i64`, else as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Big(pub BigInt);

impl Serialize for Big {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl From<BigInt> for Big {
    fn from(x: BigInt) -> Self {
        Big(x)
    }
}

/// `match` if present, then `ok`; anything else counts as success.
pub fn verdict(v: &Value) -> bool {
    for key in ["match", "ok"] {
        if let Some(Value::Bool(b)) = v.get(key) {
            return *b;
        }
    }
    true
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("serializable");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut lines = Vec::new();
            flatten("", v, &mut lines);
            let mut s = lines.join("\n");
            s.push('\n');
            s
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(xs) => {
            if xs.is_empty() {
                out.push(format!("{prefix}\t"));
            }
            for (i, x) in xs.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        Value::Null => out.push(format!("{prefix}\t")),
        Value::String(s) => out.push(format!("{prefix}\t{s}")),
        other => out.push(format!("{prefix}\t{other}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn big_numbers() {
        assert_eq!(serde_json::to_string(&Big(BigInt::from(-7))).unwrap(), "-7");
        let huge = BigInt::from(i64::MAX) * BigInt::from(3);
        assert_eq!(
            serde_json::to_string(&Big(huge.clone())).unwrap(),
            format!("\"{huge}\"")
        );
    }

    #[test]
    fn tsv_keys() {
        let v = json!({"a": 1, "b": {"c": [true, "x"]}, "d": null});
        assert_eq!(render(&v, Format::Tsv), "a\t1\nb.c.0\ttrue\nb.c.1\tx\nd\t\n");
    }

    #[test]
    fn verdicts() {
        assert!(!verdict(&json!({"match": false, "ok": true})));
        assert!(verdict(&json!({"match": null, "ok": true})));
        assert!(verdict(&json!({"x": 1})));
    }
}
