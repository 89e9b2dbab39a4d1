//! Randomised and exhaustive checks: sparse paving generation, gamma-positivity
//! sweeps, relaxation identities and the binomial inequalities behind
//! gamma-positivity of sparse paving matroids.
//!
//! Every check emits a [`CheckRecord`], serialised as one JSON line.

mod appendix;
mod generator;
mod relaxation_suite;
mod sweep;
mod tableaux_suite;

pub use appendix::{alternating_binomial_check, verify_appendix};
pub use generator::{lambda_bound, random_sparse_paving, sparse_paving_corpus, SparsePavingSpec};
pub use relaxation_suite::relaxation_theorem_suite;
pub use sweep::{gamma_positivity_sweep, CorpusEntry, SweepEntry};
pub use tableaux_suite::{tableaux_identity_suite, ENUMERATION_LIMIT};

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub params: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CheckRecord {
    pub fn new(
        check: impl Into<String>,
        params: Value,
        ok: bool,
        witness: Option<Value>,
    ) -> CheckRecord {
        CheckRecord {
            check: check.into(),
            params,
            verdict: Verdict::from_bool(ok),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialise")
    }
}

/// Number of failed records.
pub fn failures(records: &[CheckRecord]) -> usize {
    records.iter().filter(|r| !r.passed()).count()
}
