use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::engine::{random_pfa, restart_statistics, simulate_monte_carlo};
use crate::error::Result;
use crate::rational::{format_rational, rat};
use crate::report::{ExperimentReport, ReportRow};

pub(super) fn restart(opts: &super::SuiteOptions) -> Result<ExperimentReport> {
    let trials = opts.trials_or(100_000);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let alphabet = Alphabet::binary();
    let mut rep = ExperimentReport::new();
    let mut made = 0;
    while made < 50 {
        let states = rng.random_range(3..=6);
        let p = random_pfa(&mut rng, states, &alphabet);
        let len = rng.random_range(0..=10);
        let w: String = (0..len).map(|_| if rng.random_bool(0.5) { '1' } else { '0' }).collect();
        let stats = match restart_statistics(&p, &w) {
            Ok(s) if s.accept_per_pass.clone() + &s.reject_per_pass >= rat(1, 100) => s,
            _ => continue,
        };
        let (acceptance, expected) = (stats.acceptance, stats.expected_passes);
        made += 1;
        let seed = opts.seed.wrapping_mul(1_000).wrapping_add(made);
        let mc = simulate_monte_carlo(&p, &w, trials, seed)?;
        let params = format!("{states} states, seed {seed}");
        let input = format!("{w:?}, {trials} trials");
        rep.push(ReportRow::verdict(
            11,
            "random PFA",
            &params,
            &input,
            Some(&mc.accepted_fraction()),
            format!("within 5 sigma of {}", format_rational(&acceptance)),
            mc.within_sigmas(&acceptance, 5),
        ));
        let expected = &expected;
        let dev = mc.mean_passes() - expected;
        let ok = dev.clone() * &dev <= expected * expected * rat(1, 400);
        rep.push(ReportRow::verdict(
            11,
            "random PFA (passes)",
            &params,
            &input,
            Some(&mc.mean_passes()),
            format!("within 5% of {}", format_rational(expected)),
            ok,
        ));
    }
    Ok(rep)
}
