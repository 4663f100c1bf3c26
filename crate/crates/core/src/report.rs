//! Machine-readable verdicts for the verification suites.
//!
//! A suite runs a family of checks over a corpus and produces one
//! [`VerificationReport`]: per-case verdicts with the dimensions that were
//! compared, wall-clock timings, and — for failures — a standalone
//! counterexample (realization rows, field, expression, offending weight)
//! sufficient to reproduce the case in isolation.

use serde::{Deserialize, Serialize};

/// Everything needed to replay a failing case by itself.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Counterexample {
    /// Integer row matrix spanning the realization.
    pub rows: Vec<Vec<i64>>,
    /// Number of ground-set elements (columns).
    pub ground: usize,
    /// Field label the case ran over.
    pub field: String,
    /// The bundle expression or operation under test.
    pub expression: String,
    /// The torus weight at which the discrepancy appeared, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<i64>>,
}

/// Verdict for one case of a suite.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseReport {
    /// Stable case identifier, e.g. `u_2_4 / wedge(2, Q)`.
    pub case: String,
    /// Whether the check held.
    pub ok: bool,
    /// The dimension vector the case computed (empty when not applicable).
    pub dims: Vec<usize>,
    /// Human-readable expected-versus-got note.
    pub detail: String,
    /// Wall-clock milliseconds spent on the case.
    pub millis: u64,
    /// Present exactly when the case failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// The outcome of one verification suite over one corpus.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Suite name as given on the command line.
    pub suite: String,
    /// Field label the suite ran over.
    pub field: String,
    /// Version of this library.
    pub engine_version: String,
    /// Per-case verdicts in deterministic corpus order.
    pub cases: Vec<CaseReport>,
    /// Number of passing cases.
    pub passed: usize,
    /// Number of failing cases.
    pub failed: usize,
    /// Whether every case passed.
    pub ok: bool,
    /// Total wall-clock milliseconds.
    pub millis: u64,
}

impl VerificationReport {
    /// Assemble a report from finished cases, filling the tallies.
    pub fn from_cases(
        suite: &str,
        field: &str,
        cases: Vec<CaseReport>,
        millis: u64,
    ) -> VerificationReport {
        let passed = cases.iter().filter(|c| c.ok).count();
        let failed = cases.len() - passed;
        VerificationReport {
            suite: suite.to_string(),
            field: field.to_string(),
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
            cases,
            passed,
            failed,
            ok: failed == 0,
            millis,
        }
    }

    /// The failing cases, in order.
    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| !c.ok)
    }
}
