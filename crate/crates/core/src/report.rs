//! The uniform check-report structure emitted by the command line
//! tools: a named check, a pass flag, and sorted maps of tables and
//! witnesses.  Serialization is deterministic — `BTreeMap` keys are
//! ordered and no volatile data (timestamps, paths, rng state) is ever
//! included.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

use crate::error::Error;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Which check produced this report.
    pub check: String,
    /// Whether every asserted condition held.
    pub pass: bool,
    /// Numeric tables (dimension vectors, multiplicity matrices, ...).
    pub tables: BTreeMap<String, Value>,
    /// Certifying data: maps, sequences, failure descriptions.
    pub witnesses: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(check: &str, pass: bool) -> Self {
        Report {
            check: check.to_string(),
            pass,
            tables: BTreeMap::new(),
            witnesses: BTreeMap::new(),
        }
    }

    pub fn with_table(mut self, key: &str, value: impl Serialize) -> Self {
        self.tables.insert(
            key.to_string(),
            serde_json::to_value(value).expect("table values serialize"),
        );
        self
    }

    pub fn with_witness(mut self, key: &str, value: impl Serialize) -> Self {
        self.witnesses.insert(
            key.to_string(),
            serde_json::to_value(value).expect("witness values serialize"),
        );
        self
    }

    /// Canonical serialization: pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text)
            .map_err(|e| Error::input(format!("malformed report JSON: {e}")))
    }
}
