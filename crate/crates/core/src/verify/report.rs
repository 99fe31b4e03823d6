use serde_json::{json, Map, Value};

use super::Identity;
use crate::error::Result;
use crate::json::{encode_entries, RingJson};
use crate::matrix::Matrix;
use crate::ring::Ring;

/// Rings whose descriptors can be echoed into report inputs.
pub trait JsonRing: Ring + RingJson {}

impl<R: Ring + RingJson> JsonRing for R {}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The identity's hypothesis does not hold on this input, so nothing was checked.
    HypothesisNotMet(String),
}

/// Result of checking one identity on one input.
///
/// `residual` holds `LHS - RHS` (one entry per part for identities with
/// several parts) and is `None` exactly when the hypothesis was not met.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub identity: String,
    pub status: Status,
    pub residual: Option<Value>,
    pub inputs: Value,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn hypothesis_met(&self) -> bool {
        !matches!(self.status, Status::HypothesisNotMet(_))
    }

    pub(crate) fn not_met(identity: &str, reason: impl Into<String>, inputs: Value) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            status: Status::HypothesisNotMet(reason.into()),
            residual: None,
            inputs,
        }
    }

    /// Adds a key to the input echo (used for case index and seed).
    pub fn annotate(&mut self, key: &str, value: Value) {
        if let Value::Object(obj) = &mut self.inputs {
            obj.insert(key.to_string(), value);
        }
    }

    pub fn to_json(&self) -> Value {
        let status = match &self.status {
            Status::Pass => json!("pass"),
            Status::Fail => json!("fail"),
            Status::HypothesisNotMet(_) => json!("hypothesis-not-met"),
        };
        let mut obj = Map::new();
        obj.insert("identity".into(), json!(self.identity));
        obj.insert("passed".into(), json!(self.passed()));
        obj.insert("status".into(), status);
        if let Status::HypothesisNotMet(reason) = &self.status {
            obj.insert("reason".into(), json!(reason));
        }
        obj.insert("residual".into(), self.residual.clone().unwrap_or(Value::Null));
        obj.insert("inputs".into(), self.inputs.clone());
        Value::Object(obj)
    }
}

/// Pass / fail / not-met counts over a list of reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub not_met: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::HypothesisNotMet(_) => s.not_met += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.passed + self.failed + self.not_met
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} checks: {} passed, {} failed, {} hypothesis not met",
            self.total(),
            self.passed,
            self.failed,
            self.not_met
        )
    }
}

/// Collects the parts of one identity check.
pub(crate) struct Check {
    identity: Identity,
    tamper: bool,
    parts: Vec<(String, Value, bool)>,
}

impl Check {
    pub(crate) fn new(identity: Identity, tamper: bool) -> Self {
        Check {
            identity,
            tamper,
            parts: Vec::new(),
        }
    }

    pub(crate) fn name(&self) -> &'static str {
        self.identity.name()
    }

    /// Records `lhs - rhs` for a pair of ring elements.
    pub(crate) fn elem<R: Ring>(
        &mut self,
        label: impl Into<String>,
        ring: &R,
        lhs: &R::Elem,
        rhs: &R::Elem,
    ) {
        let lhs = if std::mem::take(&mut self.tamper) {
            ring.add(lhs, &ring.one())
        } else {
            lhs.clone()
        };
        let diff = ring.sub(&lhs, rhs);
        self.parts
            .push((label.into(), ring.encode(&diff), ring.is_zero(&diff)));
    }

    /// Records `lhs - rhs` for a pair of matrices.
    pub(crate) fn matrix<R: Ring>(
        &mut self,
        label: impl Into<String>,
        lhs: &Matrix<R>,
        rhs: &Matrix<R>,
    ) -> Result<()> {
        let mut lhs = lhs.clone();
        if lhs.rows() > 0 && lhs.cols() > 0 && std::mem::take(&mut self.tamper) {
            let ring = lhs.ring().clone();
            let bumped = ring.add(lhs.entry(1, 1)?, &ring.one());
            lhs.set_entry(1, 1, bumped)?;
        }
        let diff = lhs.sub(rhs)?;
        self.parts
            .push((label.into(), encode_entries(&diff), diff.is_zero()));
        Ok(())
    }

    pub(crate) fn finish(self, inputs: Value) -> VerificationReport {
        let ok = self.parts.iter().all(|(_, _, zero)| *zero);
        let residual = if self.parts.len() == 1 {
            self.parts.into_iter().next().map(|(_, v, _)| v)
        } else {
            let mut obj = Map::new();
            for (label, v, _) in self.parts {
                obj.insert(label, v);
            }
            Some(Value::Object(obj))
        };
        VerificationReport {
            identity: self.identity.name().to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual,
            inputs,
        }
    }
}
