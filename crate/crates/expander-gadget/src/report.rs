//! Run reports: what was run, on which bytes, with which evidence.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// One verified statement and the value backing it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub evidence: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, evidence: Value) -> Self {
        Check { name: name.into(), passed, evidence }
    }
}

/// Reports are deterministic apart from `timing_ms`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// Input path → SHA-256 of its contents.
    pub inputs: BTreeMap<String, String>,
    pub parameters: Value,
    pub result: Value,
    pub checks: Vec<Check>,
    pub timing_ms: u64,
}

impl RunReport {
    pub fn new(command: &[String]) -> Self {
        RunReport {
            command: command.to_vec(),
            inputs: BTreeMap::new(),
            parameters: Value::Null,
            result: Value::Null,
            checks: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn input(&mut self, path: &str, bytes: &[u8]) {
        self.inputs.insert(path.to_string(), sha256_hex(bytes));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Drops the timing field so two runs can be compared byte for byte.
pub fn strip_timing(report_json: &str) -> String {
    let mut v: Value = match serde_json::from_str(report_json) {
        Ok(v) => v,
        Err(_) => return report_json.to_string(),
    };
    if let Some(o) = v.as_object_mut() {
        o.remove("timing_ms");
    }
    serde_json::to_string_pretty(&v).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_of_empty() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn timing_is_stripped() {
        let mut a = RunReport::new(&["x".into()]);
        let mut b = a.clone();
        a.timing_ms = 3;
        b.timing_ms = 9;
        assert_ne!(a.to_json(), b.to_json());
        assert_eq!(strip_timing(&a.to_json()), strip_timing(&b.to_json()));
    }
}
