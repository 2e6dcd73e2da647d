use serde::{Deserialize, Serialize};

use super::rng::SplitMix64;

/// Default exhaustive ceiling per identity.
pub const DEFAULT_BUDGET: u64 = 2_000_000;
/// Number of draws in sampled mode.
pub const SAMPLE_SIZE: u64 = 100_000;
/// Failures kept verbatim per check; the rest are only counted.
pub const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

/// A concrete counterexample: the inputs (as literals) and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub tuple: Vec<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub axiom: String,
    pub mode: Mode,
    pub tuples_checked: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new(axiom: impl Into<String>, mode: Mode) -> Self {
        CheckReport { axiom: axiom.into(), mode, tuples_checked: 0, failure_count: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn record(&mut self, outcome: std::result::Result<(), Failure>) {
        self.tuples_checked += 1;
        if let Err(f) = outcome {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(f);
            }
        }
    }

    /// A single yes/no fact counted as one checked tuple.
    pub fn single(axiom: impl Into<String>, ok: bool, detail: impl FnOnce() -> Failure) -> Self {
        let mut c = CheckReport::new(axiom, Mode::Exhaustive);
        c.record(if ok { Ok(()) } else { Err(detail()) });
        c
    }
}

/// Iterates the index tuples of `dims`: all of them when the count is at
/// most `budget`, otherwise `min(budget, SAMPLE_SIZE)` uniform draws. The
/// callback returns `None` for tuples outside the identity's hypotheses;
/// those are not counted.
pub fn scan_tuples(
    axiom: &str,
    dims: &[usize],
    budget: u64,
    seed: u64,
    mut check: impl FnMut(&[usize]) -> Option<std::result::Result<(), Failure>>,
) -> CheckReport {
    let total = dims.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d as u64));
    let mut idx = vec![0usize; dims.len()];
    if dims.iter().any(|&d| d == 0) {
        return CheckReport::new(axiom, Mode::Exhaustive);
    }
    match total {
        Some(t) if t <= budget => {
            let mut report = CheckReport::new(axiom, Mode::Exhaustive);
            for _ in 0..t {
                if let Some(o) = check(&idx) {
                    report.record(o);
                }
                for (i, d) in idx.iter_mut().zip(dims) {
                    *i += 1;
                    if *i < *d {
                        break;
                    }
                    *i = 0;
                }
            }
            report
        }
        _ => {
            let mut report = CheckReport::new(axiom, Mode::Sampled);
            let mut rng = SplitMix64::for_stream(seed, axiom);
            for _ in 0..budget.min(SAMPLE_SIZE) {
                for (i, &d) in idx.iter_mut().zip(dims) {
                    *i = rng.below(d);
                }
                if let Some(o) = check(&idx) {
                    report.record(o);
                }
            }
            report
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub space: String,
    pub mode: Mode,
    pub seed: u64,
    pub budget: u64,
    pub tuples_checked: u64,
    pub failures: Vec<Failure>,
    pub wall_time_ms: u64,
    pub paper_ref: String,
    pub quote: String,
    pub checks: Vec<CheckReport>,
    /// Observations that are recorded but not asserted.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn from_checks(
        suite: &str,
        space: String,
        seed: u64,
        budget: u64,
        paper_ref: &str,
        quote: &str,
        checks: Vec<CheckReport>,
        notes: Vec<String>,
        wall_time_ms: u64,
    ) -> Self {
        let mode = if checks.iter().all(|c| c.mode == Mode::Exhaustive) { Mode::Exhaustive } else { Mode::Sampled };
        let tuples_checked = checks.iter().map(|c| c.tuples_checked).sum();
        let failures = checks
            .iter()
            .flat_map(|c| c.failures.iter().cloned())
            .take(MAX_RECORDED_FAILURES)
            .collect();
        SuiteReport {
            suite: suite.to_string(),
            space,
            mode,
            seed,
            budget,
            tuples_checked,
            failures,
            wall_time_ms,
            paper_ref: paper_ref.to_string(),
            quote: quote.to_string(),
            checks,
            notes,
        }
    }

    /// Copy with the timing zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        SuiteReport { wall_time_ms: 0, ..self.clone() }
    }
}
