//! Output records and their readers.
//!
//! Column order is the field order below. Every CSV table written by the
//! CLI has a header row; JSON output uses the same field names.

use std::io::Read;

use anyhow::Result;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymbolRecord {
    pub a: String,
    pub b: String,
    /// Empty when `a` and `b` are not coprime.
    pub exponent: Option<u8>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KappaRecord {
    pub matrix: String,
    pub convention: String,
    pub exponent: u8,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomomorphismRecord {
    pub n: usize,
    pub convention: String,
    pub seed: u64,
    pub samples: usize,
    pub passed: usize,
    pub failed: usize,
    pub undefined: usize,
    pub first_error: Option<String>,
}

/// `p,a_p` or, with both methods, `p,a_p,a_p_check,match`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApRecord {
    pub p: u64,
    pub a_p: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_p_check: Option<i64>,
    #[serde(default, rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LValueRecord {
    #[serde(rename = "D")]
    pub d: i64,
    pub value: f64,
    pub error: f64,
    pub sign: String,
    pub conductor: u64,
    pub vanished: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    #[serde(rename = "D")]
    pub d: i64,
    pub sign: String,
    pub value: f64,
    pub error: f64,
    pub conductor: u64,
    pub cutoff: f64,
    pub vanished: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZkRecord {
    pub x: u64,
    pub even: u64,
    pub even_vanished: u64,
    pub odd: u64,
    pub undetermined: u64,
    pub fraction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GvRecord {
    pub x: u64,
    pub sum: f64,
    pub normalized: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SumRecord {
    pub x: u64,
    pub sum: f64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitRecord {
    pub exponent: f64,
    pub constant: f64,
    pub log_preferred: bool,
    pub residual: f64,
    pub linear_residual: f64,
    pub xlogx_residual: f64,
    pub degenerate: bool,
    pub xmin: f64,
    pub xmax: f64,
}

/// JSON form of `stats growth`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub rows: Vec<SumRecord>,
    pub fit: FitRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailRecord {
    pub k: u64,
    pub w: f64,
    pub bound: u64,
    pub weight: f64,
    pub partial_sum: f64,
    pub decay_flag: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub summand: u8,
    pub alpha: u32,
    pub delta: u32,
    pub value_re: f64,
    pub value_im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TPolyRecord {
    pub value_re: f64,
    pub value_im: f64,
    pub terms: Vec<TermRecord>,
}

/// Reads a CSV table with a header row.
pub fn read_csv<T: DeserializeOwned>(input: impl Read) -> Result<Vec<T>> {
    let mut r = csv::Reader::from_reader(input);
    Ok(r.deserialize().collect::<std::result::Result<_, _>>()?)
}

/// Reads JSON output (a record or an array of records).
pub fn read_json<T: DeserializeOwned>(input: impl Read) -> Result<T> {
    Ok(serde_json::from_reader(input)?)
}
