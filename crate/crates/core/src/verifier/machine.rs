use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, SymbolId};
use crate::engine::{check_designated, check_unique_names, merge_sorted, RunResult, StateId};
use crate::error::{Error, Result};
use crate::explore::{normalize_row, Table};
use crate::rational::Rational;
use crate::validation::{check_row, ValidationReport, Violation};

use super::certificate::{CertificateSource, Tape};

/// Certificate head movement after a transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum HeadMove {
    Stay,
    Advance,
}

impl HeadMove {
    pub fn delta(self) -> usize {
        match self {
            HeadMove::Stay => 0,
            HeadMove::Advance => 1,
        }
    }
}

pub type VerifierRow = Vec<(StateId, HeadMove, Rational)>;

/// A realtime postselecting PFA that also reads a one-way certificate.
///
/// Rows are indexed by `(state, input symbol, certificate symbol)`. Each
/// transition moves the certificate head by zero or one cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifierPfa {
    alphabet: Alphabet,
    certificate_alphabet: Vec<String>,
    states: Vec<String>,
    start: StateId,
    accept: StateId,
    reject: StateId,
    rows: Vec<VerifierRow>,
    /// States that never leave and never move the head; their head
    /// position is dropped so runs do not keep one copy per cell.
    parked: Vec<bool>,
}

fn parked_states(n: usize, width: usize, rows: &[VerifierRow]) -> Vec<bool> {
    (0..n)
        .map(|s| {
            rows[s * width..(s + 1) * width]
                .iter()
                .all(|r| matches!(r.as_slice(), [(t, HeadMove::Stay, p)] if *t == s && p.is_one()))
        })
        .collect()
}

impl VerifierPfa {
    /// `rows[state][symbol][certificate symbol]`.
    pub fn new(
        alphabet: Alphabet,
        certificate_alphabet: Vec<String>,
        states: Vec<String>,
        start: StateId,
        accept: StateId,
        reject: StateId,
        rows: Vec<Vec<Vec<VerifierRow>>>,
    ) -> Result<Self> {
        let n = states.len();
        check_designated(n, start, accept, reject)?;
        check_unique_names(&states)?;
        check_unique_names(&certificate_alphabet)?;
        if certificate_alphabet.is_empty() {
            return Err(Error::Structure("empty certificate alphabet".into()));
        }
        if rows.len() != n {
            return Err(Error::Structure("one row group per state expected".into()));
        }
        let (k, c) = (alphabet.symbol_count(), certificate_alphabet.len());
        let mut flat = Vec::with_capacity(n * k * c);
        for group in rows {
            if group.len() != k || group.iter().any(|g| g.len() != c) {
                return Err(Error::Structure("row group has the wrong shape".into()));
            }
            for row in group.into_iter().flatten() {
                if row.iter().any(|e| e.0 >= n) {
                    return Err(Error::Structure("transition target out of range".into()));
                }
                flat.push(normalize_row(row));
            }
        }
        let parked = parked_states(n, k * c, &flat);
        Ok(VerifierPfa { alphabet, certificate_alphabet, states, start, accept, reject, rows: flat, parked })
    }

    pub(crate) fn from_table(alphabet: Alphabet, certificate_alphabet: Vec<String>, t: Table<HeadMove>) -> Self {
        let width = alphabet.symbol_count() * certificate_alphabet.len();
        let parked = parked_states(t.names.len(), width, &t.rows);
        VerifierPfa { alphabet, certificate_alphabet, states: t.names, start: 0, accept: 1, reject: 2, rows: t.rows, parked }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    pub fn certificate_alphabet(&self) -> &[String] {
        &self.certificate_alphabet
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

    pub fn row(&self, state: StateId, symbol: SymbolId, cert: usize) -> &[(StateId, HeadMove, Rational)] {
        let (k, c) = (self.alphabet.symbol_count(), self.certificate_alphabet.len());
        &self.rows[(state * k + symbol) * c + cert]
    }

    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        for s in 0..self.states.len() {
            for sym in 0..self.alphabet.symbol_count() {
                for c in 0..self.certificate_alphabet.len() {
                    check_row(self.row(s, sym, c).iter().map(|e| &e.2), &mut v, |problem| Violation {
                        state: self.states[s].clone(),
                        symbol: self.alphabet.symbol(sym),
                        context: Some(format!("certificate {}", self.certificate_alphabet[c])),
                        problem,
                    });
                }
            }
        }
        ValidationReport { violations: v }
    }

    pub fn initial_distribution(&self) -> VerifierDistribution {
        VerifierDistribution { entries: vec![((self.start, 0), Rational::one())] }
    }
}

/// Distribution over `(state, certificate head position)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifierDistribution {
    pub(crate) entries: Vec<((StateId, usize), Rational)>,
}

impl VerifierDistribution {
    pub fn entries(&self) -> &[((StateId, usize), Rational)] {
        &self.entries
    }

    pub fn total(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |a, e| a + &e.1)
    }

    pub fn max_head(&self) -> usize {
        self.entries.iter().map(|e| e.0 .1).max().unwrap_or(0)
    }

    /// One step; `cert(j)` is the certificate symbol at cell `j`.
    pub fn step_with(&self, v: &VerifierPfa, symbol: SymbolId, cert: impl Fn(usize) -> usize) -> VerifierDistribution {
        let mut out = Vec::with_capacity(self.entries.len() * 2);
        for ((s, pos), m) in &self.entries {
            for (t, mv, p) in v.row(*s, symbol, cert(*pos)) {
                let val = if p.is_one() { m.clone() } else { m * p };
                let pos = if v.parked[*t] { 0 } else { pos + mv.delta() };
                out.push(((*t, pos), val));
            }
        }
        VerifierDistribution { entries: merge_sorted(out) }
    }

    pub fn step(&self, v: &VerifierPfa, symbol: SymbolId, tape: &Tape) -> VerifierDistribution {
        self.step_with(v, symbol, |j| tape.symbol_at(j))
    }

    pub fn outcome(&self, v: &VerifierPfa) -> RunResult {
        let (mut a, mut r, mut o) = (Rational::zero(), Rational::zero(), Rational::zero());
        for ((s, _), m) in &self.entries {
            if *s == v.accept {
                a += m;
            } else if *s == v.reject {
                r += m;
            } else {
                o += m;
            }
        }
        RunResult { accept_mass: a, reject_mass: r, other_mass: o }
    }
}

/// Exact run of the verifier on `¢ w $` with the given certificate.
pub fn run_verifier_exact(v: &VerifierPfa, w: &str, cert: &impl CertificateSource) -> Result<RunResult> {
    v.validate().into_result()?;
    let tape = cert.to_tape(v.certificate_alphabet())?;
    let input = v.alphabet().tape(w)?;
    Ok(ScaledRun::new(v).run(v, &input, &tape))
}

/// The same run over integers: every probability is scaled by the common
/// denominator `den`, so a step is a product with a machine-sized integer
/// and no gcd is ever taken. Mass after `t` steps is `numerator / den^t`.
struct ScaledRun {
    den: BigInt,
    rows: Vec<Vec<(StateId, usize, BigInt)>>,
}

impl ScaledRun {
    fn new(v: &VerifierPfa) -> Self {
        let den = v.rows.iter().flatten().fold(BigInt::one(), |d, e| d.lcm(e.2.denom()));
        let rows = v
            .rows
            .iter()
            .map(|r| r.iter().map(|(t, mv, p)| (*t, mv.delta(), p.numer() * (&den / p.denom()))).collect())
            .collect();
        ScaledRun { den, rows }
    }

    fn run(&self, v: &VerifierPfa, input: &[SymbolId], tape: &Tape) -> RunResult {
        let (k, c) = (v.alphabet.symbol_count(), v.certificate_alphabet.len());
        let mut entries: Vec<((StateId, usize), BigInt)> = vec![((v.start, 0), BigInt::one())];
        for &sym in input {
            let mut out = Vec::with_capacity(entries.len() * 2);
            for ((s, pos), m) in &entries {
                for (t, d, q) in &self.rows[(s * k + sym) * c + tape.symbol_at(*pos)] {
                    let pos = if v.parked[*t] { 0 } else { pos + d };
                    out.push(((*t, pos), m * q));
                }
            }
            out.sort_unstable_by_key(|e| e.0);
            entries = Vec::with_capacity(out.len());
            for (key, m) in out {
                match entries.last_mut() {
                    Some((k2, acc)) if *k2 == key => *acc += m,
                    _ => entries.push((key, m)),
                }
            }
        }
        let scale = num_traits::pow(self.den.clone(), input.len());
        let (mut a, mut r, mut o) = (BigInt::zero(), BigInt::zero(), BigInt::zero());
        for ((s, _), m) in entries {
            match s {
                s if s == v.accept => a += m,
                s if s == v.reject => r += m,
                _ => o += m,
            }
        }
        let frac = |n: BigInt| Rational::new(n, scale.clone());
        RunResult { accept_mass: frac(a), reject_mass: frac(r), other_mass: frac(o) }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::verifier::{build_usquare, Certificate};

    fn rational_run(v: &VerifierPfa, w: &str, cert: &Certificate) -> RunResult {
        let tape = cert.to_tape(v.certificate_alphabet()).unwrap();
        let mut d = v.initial_distribution();
        for sym in v.alphabet().tape(w).unwrap() {
            d = d.step(v, sym, &tape);
        }
        d.outcome(v)
    }

    #[test]
    fn scaled_run_matches_rational_steps() {
        let v = build_usquare(&rat(1, 3)).unwrap();
        for (n, c) in [(4, "ab$"), (9, "aaabbb$"), (7, "aab"), (6, "")] {
            let w = "0".repeat(n);
            let cert = Certificate::dollar(c);
            assert_eq!(run_verifier_exact(&v, &w, &cert).unwrap(), rational_run(&v, &w, &cert), "n={n} {c}");
        }
    }
}
