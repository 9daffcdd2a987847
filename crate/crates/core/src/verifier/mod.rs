//! Named verification checks over the group and ring engines.
//!
//! Each check rebuilds its objects from scratch, examines every case in its
//! scope, and produces a [`CheckReport`] whose witness strings say exactly
//! what was established per case. Reports are deterministic apart from
//! `wall_time_ms`: same library version, same verdicts, same witnesses.
//!
//! Run one check with [`run_check`], or the whole battery with [`run_all`]
//! (checks execute in parallel; reports come back in registry order).

mod holomorphs;
mod matrices;
mod misc;
mod report;
mod sl23;
mod tables;

pub use report::{CheckReport, CheckStatus, VerificationSummary};

use rayon::prelude::*;

use crate::{Error, Limits, Result};

/// Options shared by every check.
#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    pub limits: Limits,
    /// Overrides the sweep range of checks that have a natural bound (the
    /// holomorph survey, the dihedral-product range, the field-order list of
    /// the characteristic-zero obstruction). Checks without a tunable range
    /// ignore it.
    pub bound: Option<u64>,
}

type CheckFn = fn(&CheckOptions) -> Result<CheckReport>;

/// All checks, in canonical execution and reporting order.
const REGISTRY: &[(&str, CheckFn)] = &[
    ("units-table", tables::check_units_table),
    ("sl23-char2", sl23::check_char2),
    ("sl23-char4", sl23::check_char4),
    ("sl23-choice-independence", sl23::check_choice_independence),
    ("sl-facts", matrices::check_sl_facts),
    ("uc-structure", matrices::check_uc_structure),
    ("char0-obstruction", matrices::check_char0_obstruction),
    ("hol-facts", holomorphs::check_hol_facts),
    ("theorem-neat", holomorphs::check_theorem_neat),
    ("hurwitz", misc::check_hurwitz),
    ("agl1-remark", misc::check_agl1_remark),
];

/// Names of all registered checks, in canonical order.
pub fn all_check_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|&(name, _)| name).collect()
}

/// Runs a single check by name. Unknown names are a usage error.
pub fn run_check(name: &str, opts: &CheckOptions) -> Result<CheckReport> {
    match REGISTRY.iter().find(|&&(n, _)| n == name) {
        Some(&(_, f)) => f(opts),
        None => Err(Error::BadParameter(format!(
            "unknown check '{name}'; available checks: {}",
            all_check_names().join(", ")
        ))),
    }
}

/// Runs every registered check.
pub fn run_all(opts: &CheckOptions, jobs: Option<usize>) -> Result<VerificationSummary> {
    let names = all_check_names();
    run_selected(&names, opts, jobs)
}

/// Runs the named checks in parallel and aggregates their reports in the
/// order given. `jobs` caps the worker-thread count; `None` lets the thread
/// pool size itself.
pub fn run_selected(
    names: &[&str],
    opts: &CheckOptions,
    jobs: Option<usize>,
) -> Result<VerificationSummary> {
    for name in names {
        if !REGISTRY.iter().any(|&(n, _)| n == *name) {
            return Err(Error::BadParameter(format!(
                "unknown check '{name}'; available checks: {}",
                all_check_names().join(", ")
            )));
        }
    }
    let run = || -> Result<Vec<CheckReport>> {
        names.par_iter().map(|name| run_check(name, opts)).collect()
    };
    let reports = match jobs {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::Internal(format!("worker pool construction failed: {e}")))?;
            pool.install(run)?
        }
        None => run()?,
    };
    Ok(VerificationSummary::new(reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_stable() {
        assert_eq!(
            all_check_names(),
            vec![
                "units-table",
                "sl23-char2",
                "sl23-char4",
                "sl23-choice-independence",
                "sl-facts",
                "uc-structure",
                "char0-obstruction",
                "hol-facts",
                "theorem-neat",
                "hurwitz",
                "agl1-remark",
            ]
        );
    }

    #[test]
    fn unknown_check_is_a_usage_error() {
        let err = run_check("no-such-check", &CheckOptions::default()).unwrap_err();
        assert!(matches!(err, Error::BadParameter(_)));
        let err = run_selected(&["hurwitz", "typo"], &CheckOptions::default(), None).unwrap_err();
        assert!(matches!(err, Error::BadParameter(_)));
    }

    #[test]
    fn selected_subset_keeps_requested_order() {
        let summary =
            run_selected(&["agl1-remark", "hurwitz"], &CheckOptions::default(), Some(2)).unwrap();
        let names: Vec<&str> = summary
            .reports
            .iter()
            .map(|r| r.check_name.as_str())
            .collect();
        assert_eq!(names, vec!["agl1-remark", "hurwitz"]);
        assert_eq!(summary.status, CheckStatus::Pass);
    }
}
