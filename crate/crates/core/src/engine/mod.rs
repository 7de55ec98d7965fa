//! Postselecting realtime PFAs and their exact evaluation.

mod enumerate;
mod monte_carlo;
mod random;

pub use enumerate::{enumerate_words, words_up_to};
pub use monte_carlo::{simulate_monte_carlo, McEstimate, MonteCarlo};
pub use random::random_pfa;

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, SymbolId};
use crate::error::{Error, Result};
use crate::explore::{normalize_row, Table};
use crate::rational::Rational;
use crate::validation::{check_row, ValidationReport, Violation};

pub type StateId = usize;
pub type Row = Vec<(StateId, Rational)>;

/// A realtime PFA with designated postselection states.
///
/// `accept` and `reject` are the two postselection states; every other state
/// is non-postselecting. Rows are kept sorted by target and free of zeros, so
/// structural equality coincides with equality of transition functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostPfa {
    alphabet: Alphabet,
    states: Vec<String>,
    start: StateId,
    accept: StateId,
    reject: StateId,
    rows: Vec<Row>,
}

impl PostPfa {
    /// `rows[state][symbol]` with symbols indexed as in [`Alphabet`].
    pub fn new(
        alphabet: Alphabet,
        states: Vec<String>,
        start: StateId,
        accept: StateId,
        reject: StateId,
        rows: Vec<Vec<Row>>,
    ) -> Result<Self> {
        let n = states.len();
        let k = alphabet.symbol_count();
        check_designated(n, start, accept, reject)?;
        if rows.len() != n {
            return Err(Error::Structure(format!("{} states but {} row groups", n, rows.len())));
        }
        let mut flat = Vec::with_capacity(n * k);
        for (s, group) in rows.into_iter().enumerate() {
            if group.len() != k {
                return Err(Error::Structure(format!(
                    "state {} has {} rows, expected {k}",
                    states[s],
                    group.len()
                )));
            }
            for row in group {
                if let Some((t, _)) = row.iter().find(|(t, _)| *t >= n) {
                    return Err(Error::Structure(format!("target {t} out of range")));
                }
                let r: Vec<(StateId, (), Rational)> = row.into_iter().map(|(t, p)| (t, (), p)).collect();
                flat.push(normalize_row(r).into_iter().map(|(t, _, p)| (t, p)).collect());
            }
        }
        check_unique_names(&states)?;
        Ok(PostPfa { alphabet, states, start, accept, reject, rows: flat })
    }

    pub(crate) fn from_table(alphabet: Alphabet, t: Table<()>) -> Self {
        // roots are always (start, accept, reject) in that order
        PostPfa {
            alphabet,
            states: t.names,
            start: 0,
            accept: 1,
            reject: 2,
            rows: t.rows.into_iter().map(|r| r.into_iter().map(|(t, _, p)| (t, p)).collect()).collect(),
        }
    }

    pub fn builder(alphabet: Alphabet) -> PfaBuilder {
        PfaBuilder { alphabet, names: Vec::new(), rows: HashMap::new(), designated: None }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    pub fn state_count(&self) -> usize {
        self.states.len()
    }
    pub fn state_names(&self) -> &[String] {
        &self.states
    }
    pub fn start(&self) -> StateId {
        self.start
    }
    pub fn accept(&self) -> StateId {
        self.accept
    }
    pub fn reject(&self) -> StateId {
        self.reject
    }

    pub fn row(&self, state: StateId, symbol: SymbolId) -> &[(StateId, Rational)] {
        &self.rows[state * self.alphabet.symbol_count() + symbol]
    }

    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        for s in 0..self.states.len() {
            for sym in 0..self.alphabet.symbol_count() {
                check_row(self.row(s, sym).iter().map(|e| &e.1), &mut v, |problem| Violation {
                    state: self.states[s].clone(),
                    symbol: self.alphabet.symbol(sym),
                    context: None,
                    problem,
                });
            }
        }
        ValidationReport { violations: v }
    }

    pub fn initial_distribution(&self) -> PfaDistribution {
        PfaDistribution { entries: vec![(self.start, Rational::one())] }
    }
}

pub(crate) fn check_designated(n: usize, start: usize, accept: usize, reject: usize) -> Result<()> {
    if start >= n || accept >= n || reject >= n {
        return Err(Error::Structure("designated state out of range".into()));
    }
    if accept == reject {
        return Err(Error::Structure("accepting and rejecting states coincide".into()));
    }
    Ok(())
}

pub(crate) fn check_unique_names(states: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for s in states {
        if !seen.insert(s.as_str()) {
            return Err(Error::Structure(format!("state {s:?} named twice")));
        }
    }
    Ok(())
}

/// Incremental construction by state name; missing rows stay empty and are
/// reported by validation.
pub struct PfaBuilder {
    alphabet: Alphabet,
    names: Vec<String>,
    rows: HashMap<(StateId, SymbolId), Row>,
    designated: Option<(StateId, StateId, StateId)>,
}

impl PfaBuilder {
    pub fn state(&mut self, name: &str) -> StateId {
        match self.names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                self.names.push(name.to_string());
                self.names.len() - 1
            }
        }
    }

    pub fn transition(&mut self, from: &str, symbol: char, to: &str, p: Rational) -> Result<&mut Self> {
        let sym = self.alphabet.id(symbol).ok_or(Error::UnknownSymbol(symbol))?;
        let f = self.state(from);
        let t = self.state(to);
        self.rows.entry((f, sym)).or_default().push((t, p));
        Ok(self)
    }

    /// Self-loops with probability one on every symbol that has no row yet.
    pub fn absorbing(&mut self, name: &str) -> &mut Self {
        let s = self.state(name);
        for sym in 0..self.alphabet.symbol_count() {
            self.rows.entry((s, sym)).or_insert_with(|| vec![(s, Rational::one())]);
        }
        self
    }

    pub fn designate(&mut self, start: &str, accept: &str, reject: &str) -> &mut Self {
        let d = (self.state(start), self.state(accept), self.state(reject));
        self.designated = Some(d);
        self
    }

    pub fn build(&self) -> Result<PostPfa> {
        let (s, a, r) = self.designated.ok_or_else(|| Error::Structure("no designated states".into()))?;
        let k = self.alphabet.symbol_count();
        let rows = (0..self.names.len())
            .map(|st| (0..k).map(|sym| self.rows.get(&(st, sym)).cloned().unwrap_or_default()).collect())
            .collect();
        PostPfa::new(self.alphabet.clone(), self.names.clone(), s, a, r, rows)
    }
}

/// Where the probability mass ended after reading `¢ w $`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub accept_mass: Rational,
    pub reject_mass: Rational,
    pub other_mass: Rational,
}

impl RunResult {
    /// `a + r`, the probability that a single pass reaches a decision.
    pub fn decision_mass(&self) -> Rational {
        &self.accept_mass + &self.reject_mass
    }

    /// `a / (a + r)`, or `None` when postselection is undefined.
    pub fn acceptance_probability(&self) -> Option<Rational> {
        let d = self.decision_mass();
        (!d.is_zero()).then(|| &self.accept_mass / d)
    }

    pub fn rejection_probability(&self) -> Option<Rational> {
        let d = self.decision_mass();
        (!d.is_zero()).then(|| &self.reject_mass / d)
    }

    /// Expected passes until a decision in the restarting reading.
    pub fn expected_passes(&self) -> Option<Rational> {
        let d = self.decision_mass();
        (!d.is_zero()).then(|| d.recip())
    }

    pub fn defined_acceptance(&self) -> Result<Rational> {
        self.acceptance_probability().ok_or(Error::PostselectionUndefined)
    }

    /// `rejection >= bound`, decided by cross-multiplication.
    pub fn rejects_with_at_least(&self, bound: &Rational) -> bool {
        let d = self.decision_mass();
        !d.is_zero() && self.reject_mass >= bound * d
    }

    pub fn accepts_with_at_least(&self, bound: &Rational) -> bool {
        let d = self.decision_mass();
        !d.is_zero() && self.accept_mass >= bound * d
    }
}

/// Sparse distribution over states, sorted by state id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfaDistribution {
    entries: Vec<(StateId, Rational)>,
}

impl PfaDistribution {
    pub fn entries(&self) -> &[(StateId, Rational)] {
        &self.entries
    }

    pub fn total(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |acc, e| acc + &e.1)
    }

    pub fn mass(&self, s: StateId) -> Rational {
        self.entries
            .binary_search_by_key(&s, |e| e.0)
            .map(|i| self.entries[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn step(&self, pfa: &PostPfa, symbol: SymbolId) -> PfaDistribution {
        let mut out: Vec<(StateId, Rational)> = Vec::with_capacity(self.entries.len() * 2);
        for (s, m) in &self.entries {
            for (t, p) in pfa.row(*s, symbol) {
                let v = if p.is_one() { m.clone() } else { m * p };
                out.push((*t, v));
            }
        }
        PfaDistribution { entries: merge_sorted(out) }
    }

    pub fn outcome(&self, pfa: &PostPfa) -> RunResult {
        let mut a = Rational::zero();
        let mut r = Rational::zero();
        let mut o = Rational::zero();
        for (s, m) in &self.entries {
            if *s == pfa.accept {
                a += m;
            } else if *s == pfa.reject {
                r += m;
            } else {
                o += m;
            }
        }
        RunResult { accept_mass: a, reject_mass: r, other_mass: o }
    }
}

pub(crate) fn merge_sorted<K: Ord + Copy>(mut v: Vec<(K, Rational)>) -> Vec<(K, Rational)> {
    if v.len() <= 1 {
        return v;
    }
    v.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(K, Rational)> = Vec::with_capacity(v.len());
    for (k, m) in v {
        match out.last_mut() {
            Some(last) if last.0 == k => last.1 += m,
            _ => out.push((k, m)),
        }
    }
    out
}

/// Exact acceptance data for `¢ w $`.
pub fn run_exact(pfa: &PostPfa, w: &str) -> Result<RunResult> {
    pfa.validate().into_result()?;
    let tape = pfa.alphabet.tape(w)?;
    let mut d = pfa.initial_distribution();
    for &sym in &tape {
        d = d.step(pfa, sym);
    }
    Ok(d.outcome(pfa))
}

/// Single-pass decision probabilities of the restarting reading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestartStats {
    pub accept_per_pass: Rational,
    pub reject_per_pass: Rational,
    pub acceptance: Rational,
    pub expected_passes: Rational,
}

/// Fails with [`Error::PostselectionUndefined`] when no pass ever decides.
pub fn restart_statistics(pfa: &PostPfa, w: &str) -> Result<RestartStats> {
    let r = run_exact(pfa, w)?;
    Ok(RestartStats {
        acceptance: r.defined_acceptance()?,
        expected_passes: r.expected_passes().ok_or(Error::PostselectionUndefined)?,
        accept_per_pass: r.accept_mass,
        reject_per_pass: r.reject_mass,
    })
}
