//! Serialized command reports.

use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{FuseError, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub source: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of_bytes(source: impl Into<String>, bytes: &[u8]) -> Self {
        InputDigest {
            source: source.into(),
            sha256: sha256_hex(bytes),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

/// Everything a command produced. All fields except `timing` depend only on
/// the command line and the input documents.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub results: Value,
    pub timing: Timing,
    pub version: String,
}

impl Report {
    pub fn new(command: Vec<String>, inputs: Vec<InputDigest>, results: Value, elapsed: Duration) -> Self {
        Report {
            command,
            inputs,
            results,
            timing: Timing {
                elapsed_ms: elapsed.as_millis() as u64,
            },
            version: VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| FuseError::Parse(e.to_string()))
    }

    /// The report without its timing, for run-to-run comparison.
    pub fn canonical(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        v.as_object_mut().expect("object").remove("timing");
        v
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Report::new(
            vec!["analyze".into()],
            vec![InputDigest::of_bytes("x", b"abc")],
            serde_json::json!({"a": [1, 2], "b": {"c": true}}),
            Duration::from_millis(5),
        );
        assert_eq!(
            r.inputs[0].sha256,
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        assert!(r.canonical().get("timing").is_none());
    }
}
