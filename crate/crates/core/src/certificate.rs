//! Machine-readable records of completed verifications. Every step carries
//! a SHA-256 digest of its canonical JSON so a re-run can be compared
//! bit-for-bit.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertificateKind {
    QtGenerators,
    QGenerators,
    Selmer,
    QuintuplePrune,
    Cover,
    PointCheck,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub operation: String,
    pub parameters: Value,
    pub result: Value,
    pub digest: String,
}

impl Step {
    pub fn new(operation: &str, parameters: Value, result: Value) -> Self {
        let digest = step_digest(operation, &parameters, &result);
        Step { operation: operation.to_string(), parameters, result, digest }
    }

    pub fn digest_matches(&self) -> bool {
        self.digest == step_digest(&self.operation, &self.parameters, &self.result)
    }
}

/// SHA-256 over the canonical serialization (object keys sorted).
pub fn digest_value(v: &Value) -> String {
    // serde_json's default map is ordered, so to_string is canonical
    hex::encode(Sha256::digest(v.to_string().as_bytes()))
}

fn step_digest(operation: &str, parameters: &Value, result: &Value) -> String {
    digest_value(&serde_json::json!({
        "operation": operation,
        "parameters": parameters,
        "result": result,
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Conclusion {
    pub success: bool,
    pub verdict: String,
    #[serde(default)]
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub kind: CertificateKind,
    pub inputs: Value,
    pub steps: Vec<Step>,
    pub conclusion: Conclusion,
}

impl Certificate {
    pub fn new(kind: CertificateKind, inputs: Value) -> Self {
        Certificate {
            schema_version: SCHEMA_VERSION,
            kind,
            inputs,
            steps: Vec::new(),
            conclusion: Conclusion { success: false, verdict: "incomplete".into(), details: Value::Null },
        }
    }

    pub fn push(&mut self, operation: &str, parameters: Value, result: Value) {
        self.steps.push(Step::new(operation, parameters, result));
    }

    /// Appends the steps of a sub-certificate, prefixing their operation names.
    pub fn absorb(&mut self, prefix: &str, other: &Certificate) {
        for s in &other.steps {
            self.push(&format!("{prefix}/{}", s.operation), s.parameters.clone(), s.result.clone());
        }
    }

    pub fn conclude(&mut self, success: bool, verdict: impl Into<String>, details: Value) {
        self.conclusion = Conclusion { success, verdict: verdict.into(), details };
    }

    pub fn success(&self) -> bool {
        self.conclusion.success
    }

    pub fn step(&self, operation: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.operation == operation)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> crate::Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::Error::Parse(format!("certificate: {e}")))
    }

    /// Digests of all steps, in order.
    pub fn digests(&self) -> Vec<&str> {
        self.steps.iter().map(|s| s.digest.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn roundtrip_and_digest() {
        let mut c = Certificate::new(CertificateKind::Selmer, json!({"e": ["0", "1", "-1"]}));
        c.push("selmer", json!({"b": 1, "a": 2}), json!({"dim": 2}));
        c.conclude(true, "ok", Value::Null);
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert!(back.steps[0].digest_matches());
        // key order does not matter
        let s = Step::new("selmer", json!({"a": 2, "b": 1}), json!({"dim": 2}));
        assert_eq!(s.digest, c.steps[0].digest);
        let mut tampered = back.steps[0].clone();
        tampered.result = json!({"dim": 3});
        assert!(!tampered.digest_matches());
    }
}
