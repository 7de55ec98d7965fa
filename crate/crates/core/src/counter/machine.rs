use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, SymbolId};
use crate::engine::{check_designated, check_unique_names, merge_sorted, McEstimate, MonteCarlo, RunResult, StateId};
use crate::error::{Error, Result};
use crate::explore::{normalize_row, Table};
use crate::rational::Rational;
use crate::sampler::{trial_rng, uniform, CumulativeRow};
use crate::validation::{check_row, ValidationReport, Violation};

/// Counter update applied with a transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CounterOp {
    Dec,
    Keep,
    Inc,
}

impl CounterOp {
    pub fn delta(self) -> i64 {
        match self {
            CounterOp::Dec => -1,
            CounterOp::Keep => 0,
            CounterOp::Inc => 1,
        }
    }
}

pub type CounterRow = Vec<(StateId, CounterOp, Rational)>;

/// A realtime postselecting PFA with one unbounded integer counter.
///
/// Transitions may depend on whether the counter is zero and update it by
/// `-1`, `0` or `+1`. The counter starts at zero and may go negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostPca {
    alphabet: Alphabet,
    states: Vec<String>,
    start: StateId,
    accept: StateId,
    reject: StateId,
    /// Flattened `[(state * symbols + symbol) * 2 + nonzero]`.
    rows: Vec<CounterRow>,
}

impl PostPca {
    /// `rows[state][symbol][t]` with `t = 0` for a zero counter and `t = 1` otherwise.
    pub fn new(
        alphabet: Alphabet,
        states: Vec<String>,
        start: StateId,
        accept: StateId,
        reject: StateId,
        rows: Vec<Vec<[CounterRow; 2]>>,
    ) -> Result<Self> {
        let n = states.len();
        check_designated(n, start, accept, reject)?;
        check_unique_names(&states)?;
        if rows.len() != n || rows.iter().any(|g| g.len() != alphabet.symbol_count()) {
            return Err(Error::Structure("row groups have the wrong shape".into()));
        }
        let mut flat = Vec::new();
        for row in rows.into_iter().flatten().flatten() {
            if row.iter().any(|e| e.0 >= n) {
                return Err(Error::Structure("transition target out of range".into()));
            }
            flat.push(normalize_row(row));
        }
        Ok(PostPca { alphabet, states, start, accept, reject, rows: flat })
    }

    pub(crate) fn from_table(alphabet: Alphabet, t: Table<CounterOp>) -> Self {
        PostPca { alphabet, states: t.names, start: 0, accept: 1, reject: 2, rows: t.rows }
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

    pub fn row(&self, state: StateId, symbol: SymbolId, counter_zero: bool) -> &[(StateId, CounterOp, Rational)] {
        let k = self.alphabet.symbol_count();
        &self.rows[(state * k + symbol) * 2 + usize::from(!counter_zero)]
    }

    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        for s in 0..self.states.len() {
            for sym in 0..self.alphabet.symbol_count() {
                for zero in [true, false] {
                    check_row(self.row(s, sym, zero).iter().map(|e| &e.2), &mut v, |problem| Violation {
                        state: self.states[s].clone(),
                        symbol: self.alphabet.symbol(sym),
                        context: Some(if zero { "counter zero" } else { "counter nonzero" }.into()),
                        problem,
                    });
                }
            }
        }
        ValidationReport { violations: v }
    }

    pub fn initial_distribution(&self) -> CounterDistribution {
        CounterDistribution { entries: vec![((self.start, 0), Rational::one())] }
    }
}

/// Sparse distribution over `(state, counter value)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterDistribution {
    entries: Vec<((StateId, i64), Rational)>,
}

impl CounterDistribution {
    pub fn entries(&self) -> &[((StateId, i64), Rational)] {
        &self.entries
    }

    pub fn total(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |a, e| a + &e.1)
    }

    pub fn max_abs_counter(&self) -> i64 {
        self.entries.iter().map(|e| e.0 .1.abs()).max().unwrap_or(0)
    }

    pub fn step(&self, p: &PostPca, symbol: SymbolId) -> CounterDistribution {
        let mut out = Vec::with_capacity(self.entries.len() * 2);
        for ((s, c), m) in &self.entries {
            for (t, op, pr) in p.row(*s, symbol, *c == 0) {
                let v = if pr.is_one() { m.clone() } else { m * pr };
                out.push(((*t, c + op.delta()), v));
            }
        }
        CounterDistribution { entries: merge_sorted(out) }
    }

    pub fn outcome(&self, p: &PostPca) -> RunResult {
        let (mut a, mut r, mut o) = (Rational::zero(), Rational::zero(), Rational::zero());
        for ((s, _), m) in &self.entries {
            if *s == p.accept {
                a += m;
            } else if *s == p.reject {
                r += m;
            } else {
                o += m;
            }
        }
        RunResult { accept_mass: a, reject_mass: r, other_mass: o }
    }
}

pub fn run_pca_exact(p: &PostPca, w: &str) -> Result<RunResult> {
    p.validate().into_result()?;
    let mut d = p.initial_distribution();
    for sym in p.alphabet.tape(w)? {
        d = d.step(p, sym);
    }
    Ok(d.outcome(p))
}

/// Restarting simulation with the counter tracked per trial.
pub fn run_pca_mc(p: &PostPca, w: &str, trials: u64, seed: u64) -> Result<McEstimate> {
    run_pca_mc_with(&MonteCarlo::default(), p, w, trials, seed)
}

pub fn run_pca_mc_with(mc: &MonteCarlo, p: &PostPca, w: &str, trials: u64, seed: u64) -> Result<McEstimate> {
    if trials == 0 {
        return Err(Error::EmptyTrialSet);
    }
    if !(1..=128).contains(&mc.sample_bits) {
        return Err(Error::bad("sample_bits must be in 1..=128"));
    }
    p.validate().into_result()?;
    let tape = p.alphabet.tape(w)?;
    let compiled: Vec<CumulativeRow> =
        p.rows.iter().map(|r| CumulativeRow::new(r.iter().map(|e| e.2.clone()), mc.sample_bits)).collect();
    let k = p.alphabet.symbol_count();
    let (mut accepted, mut passes) = (0, 0);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let mut used = 0;
        loop {
            if used == mc.restart_cap {
                return Err(Error::RestartCapExceeded { cap: mc.restart_cap });
            }
            used += 1;
            let (mut s, mut c) = (p.start, 0i64);
            for &sym in &tape {
                let idx = (s * k + sym) * 2 + usize::from(c != 0);
                let i = compiled[idx].pick(uniform(&mut rng, mc.sample_bits)).expect("stochastic row");
                let (t, op, _) = &p.rows[idx][i];
                s = *t;
                c += op.delta();
            }
            if s == p.accept {
                accepted += 1;
                break;
            }
            if s == p.reject {
                break;
            }
        }
        passes += used;
    }
    Ok(McEstimate { trials, accepted, passes })
}

/// Lower and upper bounds on the accept and reject masses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalResult {
    pub accept: (Rational, Rational),
    pub reject: (Rational, Rational),
}

impl IntervalResult {
    /// Bounds on `a / (a + r)` valid for every point in the mass box.
    pub fn acceptance_bounds(&self) -> Option<(Rational, Rational)> {
        let lo_d = &self.accept.0 + &self.reject.1;
        let hi_d = &self.accept.1 + &self.reject.0;
        if lo_d.is_zero() || hi_d.is_zero() {
            return None;
        }
        Some((&self.accept.0 / lo_d, &self.accept.1 / hi_d))
    }

    pub fn rejection_bounds(&self) -> Option<(Rational, Rational)> {
        self.acceptance_bounds().map(|(lo, hi)| (Rational::one() - hi, Rational::one() - lo))
    }
}

/// Runs two automata that differ only in transition probabilities, taking
/// the smaller and larger probability of every edge. When each probability
/// is monotone in some parameter, the result encloses every automaton with
/// parameter between the two.
pub fn run_pca_interval(lo: &PostPca, hi: &PostPca, w: &str) -> Result<IntervalResult> {
    lo.validate().into_result()?;
    hi.validate().into_result()?;
    let same = lo.states.len() == hi.states.len()
        && lo.alphabet == hi.alphabet
        && lo.rows.len() == hi.rows.len()
        && lo.rows.iter().zip(&hi.rows).all(|(a, b)| {
            a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.0 == y.0 && x.1 == y.1)
        });
    if !same {
        return Err(Error::bad("interval run needs structurally identical automata"));
    }
    let mut d: Vec<((StateId, i64), (Rational, Rational))> = vec![((lo.start, 0), (Rational::one(), Rational::one()))];
    for sym in lo.alphabet.tape(w)? {
        let mut out: Vec<((StateId, i64), (Rational, Rational))> = Vec::new();
        for ((s, c), (ml, mh)) in &d {
            let (rl, rh) = (lo.row(*s, sym, *c == 0), hi.row(*s, sym, *c == 0));
            for (el, eh) in rl.iter().zip(rh) {
                let (pl, ph) = if el.2 <= eh.2 { (&el.2, &eh.2) } else { (&eh.2, &el.2) };
                out.push(((el.0, c + el.1.delta()), (ml * pl, mh * ph)));
            }
        }
        out.sort_by_key(|e| e.0);
        d.clear();
        for (k, (a, b)) in out {
            match d.last_mut() {
                Some(last) if last.0 == k => {
                    last.1 .0 += a;
                    last.1 .1 += b;
                }
                _ => d.push((k, (a, b))),
            }
        }
    }
    let mut res = IntervalResult {
        accept: (Rational::zero(), Rational::zero()),
        reject: (Rational::zero(), Rational::zero()),
    };
    for ((s, _), (a, b)) in d {
        if s == lo.accept {
            res.accept.0 += a;
            res.accept.1 += b;
        } else if s == lo.reject {
            res.reject.0 += a;
            res.reject.1 += b;
        }
    }
    Ok(res)
}
