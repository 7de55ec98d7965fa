//! Experiment reports: one row per checked claim.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{decimal, format_rational, Rational};

/// How a row's exact value is compared with its bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cmp {
    Eq,
    Ge,
    Gt,
    Le,
    Lt,
}

impl Cmp {
    pub fn holds(self, value: &Rational, bound: &Rational) -> bool {
        match self {
            Cmp::Eq => value == bound,
            Cmp::Ge => value >= bound,
            Cmp::Gt => value > bound,
            Cmp::Le => value <= bound,
            Cmp::Lt => value < bound,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Cmp::Eq => "=",
            Cmp::Ge => ">=",
            Cmp::Gt => ">",
            Cmp::Le => "<=",
            Cmp::Lt => "<",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub criterion: u32,
    pub construction: String,
    pub parameters: String,
    pub input: String,
    /// Exact value as `p/q`, or empty when the row has no single value.
    pub exact: String,
    /// Display only.
    pub decimal: String,
    pub bound: String,
    pub pass: bool,
}

impl ReportRow {
    /// A row whose verdict is `value cmp bound`.
    pub fn compare(
        criterion: u32,
        construction: impl Into<String>,
        parameters: impl Into<String>,
        input: impl Into<String>,
        value: &Rational,
        cmp: Cmp,
        bound: &Rational,
    ) -> Self {
        ReportRow {
            criterion,
            construction: construction.into(),
            parameters: parameters.into(),
            input: input.into(),
            exact: format_rational(value),
            decimal: decimal(value, 12),
            bound: format!("{} {}", cmp.symbol(), format_rational(bound)),
            pass: cmp.holds(value, bound),
        }
    }

    /// A row decided elsewhere, e.g. a sampling tolerance or a count.
    pub fn verdict(
        criterion: u32,
        construction: impl Into<String>,
        parameters: impl Into<String>,
        input: impl Into<String>,
        value: Option<&Rational>,
        bound: impl Into<String>,
        pass: bool,
    ) -> Self {
        ReportRow {
            criterion,
            construction: construction.into(),
            parameters: parameters.into(),
            input: input.into(),
            exact: value.map(format_rational).unwrap_or_default(),
            decimal: value.map(|v| decimal(v, 12)).unwrap_or_default(),
            bound: bound.into(),
            pass,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub rows: Vec<ReportRow>,
}

impl ExperimentReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, row: ReportRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: ExperimentReport) {
        self.rows.extend(other.rows);
    }

    pub fn passed(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    /// Stable sort by criterion; rows of one criterion keep their order.
    pub fn sort(&mut self) {
        self.rows.sort_by_key(|r| r.criterion);
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.rows {
            w.serialize(r).map_err(|e| Error::bad(format!("csv: {e}")))?;
        }
        if self.rows.is_empty() {
            w.write_record(["criterion", "construction", "parameters", "input", "exact", "decimal", "bound", "pass"])
                .map_err(|e| Error::bad(format!("csv: {e}")))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::bad(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Long fractions are unreadable in a terminal; the CSV and JSON forms keep them.
fn short(exact: &str) -> String {
    if exact.len() <= 40 {
        exact.to_string()
    } else {
        format!("<{} chars>", exact.len())
    }
}

impl fmt::Display for ExperimentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let value = if r.exact.is_empty() { "-".to_string() } else { format!("{} ({})", short(&r.exact), r.decimal) };
            let bound: Vec<String> = r.bound.split(' ').map(short).collect();
            writeln!(
                f,
                "[{}] {:4} {} {} on {}: {} {}",
                r.criterion,
                if r.pass { "ok" } else { "FAIL" },
                r.construction,
                r.parameters,
                r.input,
                value,
                bound.join(" ")
            )?;
        }
        Ok(())
    }
}
