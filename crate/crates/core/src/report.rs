//! Verification records and their JSON-lines rendering.

use crate::poly::MultiPoly;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};
use std::time::Duration;

/// Outcome of one exact comparison.
///
/// `asserted == false` marks cases run for information only; they never make
/// a suite fail.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub params: Map<String, Value>,
    pub equal: bool,
    #[serde(skip_serializing_if = "is_true")]
    pub asserted: bool,
    pub lhs_hash: String,
    pub rhs_hash: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn is_true(b: &bool) -> bool {
    *b
}

pub fn hash_str(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

/// Insertion-ordered parameter list, rendered as a JSON object.
#[derive(Debug, Clone, Default)]
pub struct Params(Vec<(String, Value)>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }

    pub fn into_map(self) -> Map<String, Value> {
        self.0.into_iter().collect()
    }
}

impl VerifyReport {
    pub fn new(theorem: impl Into<String>, params: Params) -> Self {
        VerifyReport {
            theorem: theorem.into(),
            params: params.into_map(),
            equal: false,
            asserted: true,
            lhs_hash: String::new(),
            rhs_hash: String::new(),
            detail: None,
            seed: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn polys(mut self, lhs: &MultiPoly, rhs: &MultiPoly) -> Self {
        self.equal = lhs == rhs;
        self.lhs_hash = lhs.canonical_hash();
        self.rhs_hash = rhs.canonical_hash();
        if !self.equal {
            self.detail = Some(format!("lhs - rhs = {}", lhs - rhs));
        }
        self
    }

    pub fn ints(mut self, lhs: &BigInt, rhs: &BigInt) -> Self {
        self.equal = lhs == rhs;
        self.lhs_hash = hash_str(&lhs.to_string());
        self.rhs_hash = hash_str(&rhs.to_string());
        self.detail = Some(format!("{lhs} vs {rhs}"));
        self
    }

    /// Compares two values through their canonical text.
    pub fn texts(mut self, lhs: &str, rhs: &str) -> Self {
        self.equal = lhs == rhs;
        self.lhs_hash = hash_str(lhs);
        self.rhs_hash = hash_str(rhs);
        if !self.equal {
            self.detail = Some(format!("{lhs} vs {rhs}"));
        }
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn informational(mut self) -> Self {
        self.asserted = false;
        self
    }

    pub fn timed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    /// True unless an asserted comparison failed.
    pub fn passed(&self) -> bool {
        self.equal || !self.asserted
    }

    /// One JSON object on one line; `elapsed_ms` is only included on request
    /// so that default output is reproducible byte for byte.
    pub fn to_json_line(&self, timing: bool) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if timing {
            v.as_object_mut()
                .expect("object")
                .insert("elapsed_ms".into(), Value::from(self.elapsed.as_millis() as u64));
        }
        serde_json::to_string(&v).expect("value serializes")
    }
}

/// Runs `f` and stamps the report with the time it took.
pub fn timed(f: impl FnOnce() -> VerifyReport) -> VerifyReport {
    let start = std::time::Instant::now();
    let r = f();
    let elapsed = start.elapsed();
    r.timed(elapsed)
}

pub fn all_passed(reports: &[VerifyReport]) -> bool {
    reports.iter().all(VerifyReport::passed)
}
