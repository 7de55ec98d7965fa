//! Stochasticity reports shared by the three machine kinds.

use std::fmt;

use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    /// Outgoing probabilities do not sum to one; carries the actual sum.
    SumNotOne(Rational),
    /// A single entry outside `[0, 1]`.
    OutOfRange(Rational),
}

/// One offending row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub state: String,
    pub symbol: char,
    /// Certificate symbol or counter test, for the machine kinds that have one.
    pub context: Option<String>,
    pub problem: Problem,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}", self.state, self.symbol)?;
        if let Some(c) = &self.context {
            write!(f, ", {c}")?;
        }
        match &self.problem {
            Problem::SumNotOne(s) => write!(f, ") sums to {}", format_rational(s)),
            Problem::OutOfRange(p) => write!(f, ") has entry {}", format_rational(p)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn into_result(self) -> crate::Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(crate::Error::MalformedAutomaton(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks one row given as probabilities; pushes any violation found.
pub(crate) fn check_row<'a>(
    probs: impl Iterator<Item = &'a Rational>,
    out: &mut Vec<Violation>,
    mk: impl Fn(Problem) -> Violation,
) {
    let mut sum = Rational::from_integer(0.into());
    let mut bad_entry = None;
    for p in probs {
        if !crate::rational::is_probability(p) && bad_entry.is_none() {
            bad_entry = Some(p.clone());
        }
        sum += p;
    }
    if let Some(p) = bad_entry {
        out.push(mk(Problem::OutOfRange(p)));
    } else if sum != Rational::from_integer(1.into()) {
        out.push(mk(Problem::SumNotOne(sum)));
    }
}
