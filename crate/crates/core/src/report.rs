//! Versioned, deterministic run reports.

use serde::Serialize;
use serde_json::Value;

pub const REPORT_SCHEMA: &str = "symineq-report/1";

/// Output of every CLI command. Contains no timings or host data, so equal
/// `(command, inputs, seed)` produce byte-identical JSON.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: String,
    pub command: String,
    pub inputs: Value,
    pub seed: u64,
    pub version: String,
    pub result: Value,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, seed: u64, result: impl Serialize) -> Self {
        RunReport {
            schema: REPORT_SCHEMA.into(),
            command: command.into(),
            inputs,
            seed,
            version: crate::VERSION.into(),
            result: serde_json::to_value(result).expect("report payloads serialize"),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
