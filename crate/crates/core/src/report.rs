//! Structured report records: machine-first, schema-versioned, with all
//! integers as decimal strings so nothing loses precision in transit.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// One pipeline-stage record. `anchor` is a stable machine-greppable id
/// (e.g. `partition.floor`, `dichotomy.regular.sandwich`); `values` carries
/// exact integers as decimal strings, rationals as `p/q`, and logs as
/// fixed-precision decimals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub name: String,
    pub anchor: String,
    pub values: BTreeMap<String, String>,
    pub pass: Option<bool>,
}

impl StageRecord {
    pub fn new(name: &str, anchor: &str) -> Self {
        StageRecord {
            name: name.to_string(),
            anchor: anchor.to_string(),
            values: BTreeMap::new(),
            pass: None,
        }
    }

    pub fn put(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.values.insert(key.to_string(), value.into());
        self
    }

    pub fn put_int(&mut self, key: &str, value: impl Into<u128>) -> &mut Self {
        self.put(key, value.into().to_string())
    }

    pub fn put_big(&mut self, key: &str, value: &BigUint) -> &mut Self {
        self.put(key, value.to_string())
    }

    pub fn put_ratio(&mut self, key: &str, value: &BigRational) -> &mut Self {
        self.put(key, format!("{}/{}", value.numer(), value.denom()))
    }

    pub fn put_real(&mut self, key: &str, value: f64) -> &mut Self {
        self.put(key, format_real(value))
    }

    pub fn passed(&mut self, ok: bool) -> &mut Self {
        self.pass = Some(ok);
        self
    }
}

/// Fixed-precision decimal rendering, stable across platforms.
pub fn format_real(value: f64) -> String {
    if value.is_nan() {
        "nan".to_string()
    } else if value.is_infinite() {
        if value > 0.0 { "inf".to_string() } else { "-inf".to_string() }
    } else {
        format!("{value:.12e}")
    }
}

/// A cycle certificate in wire form: full vertex labelings so any external
/// tool can re-verify it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatePayload {
    pub ell: usize,
    pub hinges: Vec<usize>,
    pub interiors: Vec<Vec<usize>>,
    pub edges: Vec<Vec<usize>>,
}

/// Top-level report: tool identity, command echo, stage records, and
/// certificate payloads.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredReport {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub command: String,
    pub records: Vec<StageRecord>,
    pub certificates: Vec<CertificatePayload>,
}

impl StructuredReport {
    pub fn new(tool: &str, tool_version: &str, command: String) -> Self {
        StructuredReport {
            schema_version: SCHEMA_VERSION,
            tool: tool.to_string(),
            tool_version: tool_version.to_string(),
            command,
            records: Vec::new(),
            certificates: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_string_round_trip() {
        let mut rec = StageRecord::new("partition", "partition.floor");
        let big = BigUint::from(10u32).pow(40);
        rec.put_big("edges", &big);
        assert_eq!(rec.values["edges"], big.to_string());
        assert_eq!(rec.values["edges"].parse::<BigUint>().ok(), Some(big));
    }

    #[test]
    fn real_formatting_is_fixed_precision() {
        assert_eq!(format_real(0.5), "5.000000000000e-1");
        assert_eq!(format_real(f64::NEG_INFINITY), "-inf");
    }
}
