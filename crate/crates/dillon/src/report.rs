//! Verification reports shared by the sweep routines and the CLI.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Counterexample,
    Skipped,
}

/// One offending element, with enough context to reproduce the check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Element bitmask in lowercase hex.
    pub element: String,
    pub context: String,
}

impl Counterexample {
    pub fn new(element: impl std::fmt::LowerHex, context: impl Into<String>) -> Counterexample {
        Counterexample { element: format!("{element:x}"), context: context.into() }
    }
}

/// Outcome of one verified claim: `status` is `Verified` exactly when the
/// counterexample list is empty (enforced by construction).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_millis: u64,
}

impl VerificationReport {
    /// Derives the status from the counterexample list.
    pub fn from_counterexamples(
        claim: impl Into<String>,
        parameters: BTreeMap<String, String>,
        counterexamples: Vec<Counterexample>,
        started: Instant,
    ) -> VerificationReport {
        let status = if counterexamples.is_empty() {
            Status::Verified
        } else {
            Status::Counterexample
        };
        VerificationReport {
            claim: claim.into(),
            parameters,
            status,
            counterexamples,
            elapsed_millis: started.elapsed().as_millis() as u64,
        }
    }

    pub fn skipped(claim: impl Into<String>, parameters: BTreeMap<String, String>) -> VerificationReport {
        VerificationReport {
            claim: claim.into(),
            parameters,
            status: Status::Skipped,
            counterexamples: Vec::new(),
            elapsed_millis: 0,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// Convenience builder for ordered parameter maps.
pub fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
