use crate::coin::{encode_coin, MembershipBits};
use crate::counter::{build_dima3, build_dima3_coin, dima3_member, run_pca_exact, run_pca_interval};
use crate::error::Result;
use crate::rational::{format_rational, inv_pow2, rat, Rational};
use crate::report::{Cmp, ExperimentReport, ReportRow};
use crate::zoo::{reference_membership, Language};

/// `count` single-symbol edits of `w` at evenly spread positions, cycling
/// through flips, deletions and insertions of `0`. Each edit comes with a
/// short description.
pub fn single_edits(w: &str, count: usize) -> Vec<(String, String)> {
    let b = w.as_bytes();
    let span = b.len().saturating_sub(1);
    (0..count)
        .map(|i| {
            let pos = if count > 1 { i * span / (count - 1) } else { 0 };
            let mut v = b.to_vec();
            let what = match i % 3 {
                0 => {
                    v[pos] = if v[pos] == b'0' { b'1' } else { b'0' };
                    "flip"
                }
                1 => {
                    v.remove(pos);
                    "delete"
                }
                _ => {
                    v.insert(pos, b'0');
                    "insert 0"
                }
            };
            (format!("{what} at {pos}"), String::from_utf8(v).expect("ascii"))
        })
        .collect()
}

fn rejection(r: &crate::RunResult) -> Rational {
    r.rejection_probability().unwrap_or_else(|| rat(0, 1))
}

pub(super) fn dima3(_: &super::SuiteOptions) -> Result<ExperimentReport> {
    let x = rat(1, 4);
    let p = build_dima3(&x)?;
    let w = dima3_member(1)?;
    let mut rep = ExperimentReport::new();
    let acc = run_pca_exact(&p, &w)?.defined_acceptance()?;
    rep.push(ReportRow::compare(7, "DIMA3", "x=1/4", "dima3_member(1), 198 symbols", &acc, Cmp::Eq, &rat(1, 1)));
    for (what, bad) in single_edits(&w, 20) {
        let input = format!("dima3_member(1), {what}");
        if reference_membership(&Language::Dima3, &bad) {
            rep.push(ReportRow::verdict(7, "DIMA3", "x=1/4", input, None, "edit must leave the language", false));
            continue;
        }
        let rej = rejection(&run_pca_exact(&p, &bad)?);
        rep.push(ReportRow::compare(7, "DIMA3", "x=1/4", input, &rej, Cmp::Ge, &rat(4, 5)));
    }
    Ok(rep)
}

pub(super) fn dima3_subset(_: &super::SuiteOptions) -> Result<ExperimentReport> {
    let y = rat(1, 20);
    let precision = 4;
    let w = dima3_member(1)?;
    let (what, bad) = single_edits(&w, 20).swap_remove(7);
    let mut rep = ExperimentReport::new();
    let cases: [(&str, &str, &str, bool, Rational); 3] = [
        ("1", "dima3_member(1)", &w, true, rat(4, 5)),
        ("0", "dima3_member(1)", &w, false, rat(3, 5)),
        ("1", &what, &bad, false, rat(4, 5)),
    ];
    for (bits, input, word, accept, bound) in cases {
        let coin = encode_coin(&MembershipBits::parse(bits)?, precision);
        let params = format!("y=1/20, x1={bits}, K={precision}");
        let name = "DIMA3(I)";
        let lo = build_dima3_coin(&y, &coin.p_hat)?;
        let r = run_pca_exact(&lo, word)?;
        let strict = input != "dima3_member(1)";
        let (value, cmp) = if accept {
            (r.defined_acceptance()?, Cmp::Ge)
        } else {
            (rejection(&r), if strict { Cmp::Gt } else { Cmp::Ge })
        };
        rep.push(ReportRow::compare(9, name, &params, input, &value, cmp, &bound));

        // the true coin lies in [p_hat, p_hat + 2^(-3K)]
        let hi = build_dima3_coin(&y, &(&coin.p_hat + inv_pow2(3 * precision as u64)))?;
        let iv = run_pca_interval(&lo, &hi, word)?;
        let worst = if accept { iv.acceptance_bounds().map(|b| b.0) } else { iv.rejection_bounds().map(|b| b.0) };
        let label = format!("{input}, interval over coin bias [p_hat, p_hat + 2^-{}]", 3 * precision);
        rep.push(match worst {
            Some(v) => {
                let mut row = ReportRow::compare(9, name, &params, label, &v, cmp, &bound);
                row.bound = format!("{} {} (lower end)", cmp.symbol(), format_rational(&bound));
                row
            }
            None => ReportRow::verdict(9, name, &params, label, None, "interval undefined", false),
        });
    }
    Ok(rep)
}
