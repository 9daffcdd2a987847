//! Structured results for verification checks: one [`CheckReport`] per
//! check, serializable to the stable JSON schema
//! `{check_name, status, cases_total, cases_examined, wall_time_ms,
//! witnesses: [...]}`.

use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub status: CheckStatus,
    pub cases_total: usize,
    pub cases_examined: usize,
    pub wall_time_ms: u64,
    /// Per-case detail: inputs, outcome, counterexample if any. Ordered by
    /// case index, so reports are reproducible.
    pub witnesses: Vec<String>,
}

impl CheckReport {
    /// Everything except the wall time, which legitimately varies between
    /// runs of the same deterministic check.
    pub fn same_outcome(&self, other: &CheckReport) -> bool {
        self.check_name == other.check_name
            && self.status == other.status
            && self.cases_total == other.cases_total
            && self.cases_examined == other.cases_examined
            && self.witnesses == other.witnesses
    }
}

/// Aggregate of a verification run: the individual reports in registry
/// order, plus the overall status (fail if any check failed).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub status: CheckStatus,
    pub reports: Vec<CheckReport>,
}

impl VerificationSummary {
    pub fn new(reports: Vec<CheckReport>) -> VerificationSummary {
        let status = if reports.iter().any(|r| r.status == CheckStatus::Fail) {
            CheckStatus::Fail
        } else if reports.iter().all(|r| r.status == CheckStatus::Skipped) && !reports.is_empty() {
            CheckStatus::Skipped
        } else {
            CheckStatus::Pass
        };
        VerificationSummary { status, reports }
    }
}

/// Accumulates a report while a check runs: counts cases, collects ordered
/// witnesses, and downgrades the status on the first failed case.
pub(crate) struct CheckBuilder {
    name: &'static str,
    start: Instant,
    cases_total: usize,
    cases_examined: usize,
    witnesses: Vec<String>,
    failed: bool,
}

impl CheckBuilder {
    pub fn new(name: &'static str, cases_total: usize) -> CheckBuilder {
        CheckBuilder {
            name,
            start: Instant::now(),
            cases_total,
            cases_examined: 0,
            witnesses: Vec::new(),
            failed: false,
        }
    }

    /// Records one examined case that matched the expected outcome.
    pub fn pass_case(&mut self, witness: impl Into<String>) {
        self.cases_examined += 1;
        self.witnesses.push(witness.into());
    }

    /// Records one examined case that contradicted the expected outcome.
    pub fn fail_case(&mut self, witness: impl Into<String>) {
        self.cases_examined += 1;
        self.failed = true;
        self.witnesses.push(format!("FAIL: {}", witness.into()));
    }

    /// Records a non-case observation (preamble lemma, informational sweep).
    pub fn note(&mut self, witness: impl Into<String>) {
        self.witnesses.push(witness.into());
    }

    /// Records a preamble assertion that gates the whole check.
    pub fn require(&mut self, ok: bool, witness: impl Into<String>) {
        let w = witness.into();
        if ok {
            self.witnesses.push(w);
        } else {
            self.failed = true;
            self.witnesses.push(format!("FAIL: {w}"));
        }
    }

    pub fn finish(self) -> CheckReport {
        let status = if self.failed {
            CheckStatus::Fail
        } else if self.cases_total == 0 {
            CheckStatus::Skipped
        } else {
            CheckStatus::Pass
        };
        CheckReport {
            check_name: self.name.to_string(),
            status,
            cases_total: self.cases_total,
            cases_examined: self.cases_examined,
            wall_time_ms: self.start.elapsed().as_millis() as u64,
            witnesses: self.witnesses,
        }
    }
}
