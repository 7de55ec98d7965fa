use crate::engine::{enumerate_words, run_exact};
use crate::error::Result;
use crate::rational::{format_rational, rat, Rational};
use crate::report::{Cmp, ExperimentReport, ReportRow};
use crate::zoo::{build_equal, equal_event_probs, reference_membership, Family};
use crate::RunResult;

fn member_target(x: &Rational) -> Rational {
    rat(1, 1) / (rat(1, 1) + x)
}

fn nonmember_bound(x: &Rational) -> Rational {
    rat(1, 1) / (rat(1, 1) + x * rat(2, 1))
}

/// Running tallies of the member and non-member laws.
struct Laws {
    x: Rational,
    members: u64,
    member_miss: Option<(String, Option<Rational>)>,
    nonmembers: u64,
    worst: Option<(String, Option<Rational>)>,
    /// Most words share a handful of outcomes; skip the division for repeats.
    last: Option<(RunResult, Option<Rational>)>,
}

impl Laws {
    fn new(x: &Rational) -> Self {
        Laws { x: x.clone(), members: 0, member_miss: None, nonmembers: 0, worst: None, last: None }
    }

    fn add(&mut self, w: &str, member: bool, r: &RunResult) {
        if member {
            self.members += 1;
            let acc = r.acceptance_probability();
            if self.member_miss.is_none() && acc.as_ref() != Some(&member_target(&self.x)) {
                self.member_miss = Some((w.to_string(), acc));
            }
        } else {
            self.nonmembers += 1;
            let rej = match &self.last {
                Some((seen, rej)) if seen == r => rej.clone(),
                _ => {
                    let rej = r.rejection_probability();
                    self.last = Some((r.clone(), rej.clone()));
                    rej
                }
            };
            let worse = match (&self.worst, &rej) {
                (None, _) => true,
                (Some((_, Some(_))), None) => true,
                (Some((_, Some(a))), Some(b)) => b < a,
                (Some((_, None)), _) => false,
            };
            if worse {
                self.worst = Some((w.to_string(), rej));
            }
        }
    }

    fn rows(self, criterion: u32, construction: &str, scope: &str) -> Vec<ReportRow> {
        let params = format!("x={}", format_rational(&self.x));
        let target = member_target(&self.x);
        let mut rows = Vec::new();
        let input = format!("{} members, {scope}", self.members);
        rows.push(match &self.member_miss {
            None => ReportRow::compare(criterion, construction, &params, input, &target, Cmp::Eq, &target),
            Some((w, acc)) => ReportRow::verdict(
                criterion,
                construction,
                &params,
                format!("member {w:?}"),
                acc.as_ref(),
                format!("= {}", format_rational(&target)),
                false,
            ),
        });
        let bound = nonmember_bound(&self.x);
        if let Some((w, rej)) = self.worst {
            let input = format!("{} non-members, {scope}, worst {w:?}", self.nonmembers);
            rows.push(match rej {
                Some(r) => ReportRow::compare(criterion, construction, &params, input, &r, Cmp::Ge, &bound),
                None => ReportRow::verdict(criterion, construction, &params, input, None, "postselection undefined", false),
            });
        }
        rows
    }
}

pub(super) fn equal(_: &super::SuiteOptions) -> Result<ExperimentReport> {
    let x = rat(1, 4);
    let p = build_equal(&x)?;
    let lang = Family::Equal.language();
    let mut laws = Laws::new(&x);
    for m in 1..=10 {
        let w = format!("{0}1{0}", "0".repeat(m));
        laws.add(&w, true, &run_exact(&p, &w)?);
    }
    enumerate_words(&p, 20, |w, r| {
        if !reference_membership(&lang, w) {
            laws.add(w, false, r);
        }
    })?;
    let mut rep = ExperimentReport::new();
    for row in laws.rows(1, "EQUAL", "0^m 1 0^m for m <= 10; non-members up to length 20") {
        rep.push(row);
    }
    Ok(rep)
}

pub(super) fn block_families(_: &super::SuiteOptions) -> Result<ExperimentReport> {
    let x = rat(1, 4);
    let mut rep = ExperimentReport::new();
    let families = [
        (Family::EqualBlocks, 20),
        (Family::EqualBlocksF { a: 1, b: 0 }, 20),
        (Family::EqualBlocksF { a: 2, b: 1 }, 20),
        (Family::EqualBlocksF { a: 0, b: 3 }, 20),
        (Family::Log, 16),
    ];
    for (family, len) in families {
        let p = family.build(&x)?;
        let lang = family.language();
        let mut laws = Laws::new(&x);
        enumerate_words(&p, len, |w, r| laws.add(w, reference_membership(&lang, w), r))?;
        let mut scope = format!("all words up to length {len}");
        if family == Family::Log {
            let w = "010010000100000000";
            laws.add(w, true, &run_exact(&p, w)?);
            scope.push_str(" plus 0 1 0^2 1 0^4 1 0^8");
        }
        for row in laws.rows(2, &family.name(), &scope) {
            rep.push(row);
        }
    }
    Ok(rep)
}

pub(super) fn equal_formula(_: &super::SuiteOptions) -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new();
    for x in [rat(1, 3), rat(1, 4), rat(1, 10)] {
        let p = build_equal(&x)?;
        let (mut checked, mut miss) = (0, None);
        for m in 1..=6u64 {
            for n in 1..=6u64 {
                let w = format!("{}1{}", "0".repeat(m as usize), "0".repeat(n as usize));
                let got = run_exact(&p, &w)?.acceptance_probability();
                let want = equal_event_probs(&x, m, n).acceptance(&x);
                checked += 1;
                if miss.is_none() && got.as_ref() != Some(&want) {
                    miss = Some((w, got, want));
                }
            }
        }
        let params = format!("x={}", format_rational(&x));
        rep.push(match miss {
            None => ReportRow::verdict(3, "EQUAL", params, "0^m 1 0^n, 1 <= m, n <= 6", None, format!("{checked}/{checked} equal to closed form"), true),
            Some((w, got, want)) => ReportRow::verdict(
                3,
                "EQUAL",
                params,
                w,
                got.as_ref(),
                format!("= {}", format_rational(&want)),
                false,
            ),
        });
    }
    Ok(rep)
}
