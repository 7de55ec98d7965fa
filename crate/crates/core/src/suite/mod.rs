//! The eleven acceptance checks, each producing an [`ExperimentReport`].
//!
//! Every verdict is an exact rational comparison. Sampling checks compare
//! exact counts against exact tolerances, so reruns with the same seed give
//! byte-identical reports.

mod coin;
mod counter;
mod restart;
mod verifiers;
mod zoo;

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::report::ExperimentReport;

pub use counter::single_edits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Overrides each suite's own Monte Carlo trial count.
    pub trials: Option<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 1, trials: None }
    }
}

impl SuiteOptions {
    fn trials_or(&self, default: u64) -> u64 {
        self.trials.unwrap_or(default)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteRun {
    pub id: u32,
    pub name: &'static str,
    pub report: ExperimentReport,
    pub elapsed: Duration,
}

impl SuiteRun {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

type SuiteFn = fn(&SuiteOptions) -> Result<ExperimentReport>;

const SUITES: [(&str, SuiteFn); 11] = [
    ("equal", zoo::equal),
    ("block-families", zoo::block_families),
    ("equal-formula", zoo::equal_formula),
    ("upower", verifiers::upower),
    ("usquare", verifiers::usquare),
    ("upower-k", verifiers::upower_k),
    ("dima3", counter::dima3),
    ("coin-guess", coin::guess),
    ("dima3-subset", counter::dima3_subset),
    ("upower6-subset", verifiers::upower6_subset),
    ("restart", restart::restart),
];

/// `(id, name)` of every suite.
pub fn suites() -> impl Iterator<Item = (u32, &'static str)> {
    SUITES.iter().enumerate().map(|(i, (n, _))| (i as u32 + 1, *n))
}

/// Accepts either the number or the name of a suite.
pub fn resolve(name: &str) -> Result<u32> {
    if let Ok(id) = name.parse::<u32>() {
        if (1..=SUITES.len() as u32).contains(&id) {
            return Ok(id);
        }
    }
    suites()
        .find(|(_, n)| *n == name)
        .map(|(id, _)| id)
        .ok_or_else(|| Error::bad(format!("no suite named {name:?}")))
}

pub fn run_suite(id: u32, opts: &SuiteOptions) -> Result<SuiteRun> {
    let (name, f) = *SUITES
        .get((id as usize).wrapping_sub(1))
        .ok_or_else(|| Error::OutOfRange(format!("suite {id} does not exist")))?;
    let t = Instant::now();
    let mut report = f(opts)?;
    report.sort();
    Ok(SuiteRun { id, name, report, elapsed: t.elapsed() })
}

pub fn run_all(opts: &SuiteOptions) -> Result<Vec<SuiteRun>> {
    suites().map(|(id, _)| run_suite(id, opts)).collect()
}
