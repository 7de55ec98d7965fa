use crate::coin::{encode_coin, exact_guess_success, mc_guess_success, MembershipBits};
use crate::error::Result;
use crate::rational::rat;
use crate::report::{Cmp, ExperimentReport, ReportRow};

pub(super) fn guess(opts: &super::SuiteOptions) -> Result<ExperimentReport> {
    let trials = opts.trials_or(100_000);
    let mut rep = ExperimentReport::new();
    for bit in [false, true] {
        for precision in [1, 4] {
            let bits = MembershipBits::new(vec![bit]);
            let coin = encode_coin(&bits, precision);
            let exact = exact_guess_success(1, &coin, bit)?;
            let params = format!("k=1, x1={}, K={precision}", u8::from(bit));
            let input = format!("64 tosses, p={}", coin.p_hat);
            rep.push(ReportRow::compare(8, "guess rule", &params, &input, &exact, Cmp::Ge, &rat(3, 4)));
            let mc = mc_guess_success(1, &coin, bit, trials, opts.seed)?;
            rep.push(ReportRow::verdict(
                8,
                "guess rule (Monte Carlo)",
                &params,
                format!("{trials} trials, seed {}", opts.seed),
                Some(&mc.as_rational()),
                "within 3 sigma of exact",
                mc.within_sigmas(&exact, 3),
            ));
        }
    }
    Ok(rep)
}
