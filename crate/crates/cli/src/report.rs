use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Ordered `key=value` report; `--json` renders the same fields as one object.
#[derive(Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.set("command", command);
        r
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        let value = value.into();
        match self.fields.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.fields.push((key.to_string(), value)),
        }
    }

    pub fn digest(&mut self, text: &str) {
        let hash = Sha256::digest(text.as_bytes());
        let hex: String = hash.iter().take(8).map(|b| format!("{b:02x}")).collect();
        self.set("input_sha256", hex);
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let map: Map<String, Value> = self.fields.iter().cloned().collect();
            let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("report serializes");
            s.push('\n');
            s
        } else {
            self.fields
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}={s}\n"),
                    other => format!("{k}={other}\n"),
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields_keep_insertion_order() {
        let mut r = Report::new("params");
        r.set("ndm", 8);
        r.set("layers", "3");
        r.set("ndm", 9);
        assert_eq!(r.render(false), "command=params\nndm=9\nlayers=3\n");
        let v: Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(v["ndm"], 9);
    }

    #[test]
    fn digest_is_stable() {
        let mut a = Report::new("x");
        a.digest("p mixed 1 0 0\n");
        let mut b = Report::new("x");
        b.digest("p mixed 1 0 0\n");
        assert_eq!(a.render(false), b.render(false));
    }
}
