use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// The outcome of one command. Serialized as the JSON output; `text` is
/// the human rendering and `exit` the process exit code.
///
/// Wall time is reported on stderr rather than in the JSON so identical
/// invocations produce identical bytes.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub parameters: BTreeMap<&'static str, Value>,
    pub results: Value,
    pub checks_passed: usize,
    pub checks_failed: Vec<Value>,
    #[serde(skip)]
    pub text: String,
    #[serde(skip)]
    pub exit: u8,
}

impl RunReport {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            parameters: BTreeMap::new(),
            results: Value::Null,
            checks_passed: 0,
            checks_failed: Vec::new(),
            text: String::new(),
            exit: 0,
        }
    }

    pub fn param(mut self, key: &'static str, value: impl Serialize) -> Self {
        self.parameters
            .insert(key, serde_json::to_value(value).expect("parameters serialize"));
        self
    }

    pub fn line(&mut self, text: impl AsRef<str>) {
        self.text.push_str(text.as_ref());
        self.text.push('\n');
    }
}
