//! Maximum acceptance over all certificates with a bounded prefix.

use num_traits::Zero;

use crate::alphabet::SymbolId;
use crate::error::{Error, Result};
use crate::rational::Rational;

use super::certificate::Certificate;
use super::machine::{VerifierDistribution, VerifierPfa};

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessResult {
    pub max_acceptance: Rational,
    /// First certificate in search order attaining the maximum.
    pub witness: Certificate,
    /// Complete runs evaluated; each stands for every certificate agreeing
    /// on the cells it actually read.
    pub runs: u64,
}

/// Searches every certificate `u $ $ ...` with `|u| <= max_prefix_len`.
///
/// A certificate cell is only branched on when some probability mass first
/// reads it, so the search is exhaustive while visiting far fewer than
/// `|alphabet|^max_prefix_len` runs.
pub fn soundness_search(v: &VerifierPfa, w: &str, max_prefix_len: usize) -> Result<SoundnessResult> {
    soundness_search_with_budget(v, w, max_prefix_len, DEFAULT_SEARCH_BUDGET)
}

pub fn soundness_search_with_budget(
    v: &VerifierPfa,
    w: &str,
    max_prefix_len: usize,
    budget: u64,
) -> Result<SoundnessResult> {
    v.validate().into_result()?;
    let alpha = v.certificate_alphabet();
    if alpha.iter().any(|l| l.chars().count() != 1) {
        return Err(Error::bad("search needs single-character certificate symbols"));
    }
    let tail = alpha
        .iter()
        .position(|l| l == "$")
        .ok_or_else(|| Error::bad("certificate alphabet has no '$'"))?;
    let size = (alpha.len() as u128).checked_pow(max_prefix_len as u32);
    if size.is_none_or(|s| s > budget as u128) {
        let required = size.map_or_else(|| format!("{}^{max_prefix_len}", alpha.len()), |s| s.to_string());
        return Err(Error::BudgetExceeded { required, budget });
    }
    let input = v.alphabet().tape(w)?;
    let mut s = Search { v, input, max: max_prefix_len, tail, decided: Vec::new(), best: None, runs: 0 };
    s.go(0, v.initial_distribution());
    let (max_acceptance, cells) = s.best.ok_or(Error::PostselectionUndefined)?;
    let prefix: String = cells.iter().map(|&c| alpha[c].as_str()).collect();
    Ok(SoundnessResult { max_acceptance, witness: Certificate::dollar(prefix), runs: s.runs })
}

struct Search<'a> {
    v: &'a VerifierPfa,
    input: Vec<SymbolId>,
    max: usize,
    tail: usize,
    decided: Vec<usize>,
    best: Option<(Rational, Vec<usize>)>,
    runs: u64,
}

impl Search<'_> {
    fn go(&mut self, step: usize, d: VerifierDistribution) {
        if step == self.input.len() {
            self.runs += 1;
            let r = d.outcome(self.v);
            let total = r.decision_mass();
            if total.is_zero() {
                return;
            }
            let acc = &r.accept_mass / total;
            if self.best.as_ref().is_none_or(|(b, _)| acc > *b) {
                self.best = Some((acc, self.decided.clone()));
            }
            return;
        }
        let frontier = self.decided.len();
        if frontier < self.max && d.entries.iter().any(|e| e.0 .1 == frontier) {
            for c in 0..self.v.certificate_alphabet().len() {
                self.decided.push(c);
                self.go(step, d.clone());
                self.decided.pop();
            }
            return;
        }
        let decided = &self.decided;
        let tail = self.tail;
        let next = d.step_with(self.v, self.input[step], |j| decided.get(j).copied().unwrap_or(tail));
        self.go(step + 1, next);
    }
}
