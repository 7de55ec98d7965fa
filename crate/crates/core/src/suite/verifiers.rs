use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coin::MembershipBits;
use crate::error::Result;
use crate::rational::{format_rational, rat, Rational};
use crate::report::{Cmp, ExperimentReport, ReportRow};
use crate::verifier::{
    build_upower, build_upower6i, build_upower_k, build_usquare, honest_cert_upower, honest_cert_upower6,
    honest_cert_usquare, run_verifier_exact, soundness_search, CertificateSource, Certificate, Tape, VerifierPfa,
};

fn completeness(rep: &mut ExperimentReport, c: u32, name: &str, v: &VerifierPfa, n: u64, cert: &Certificate) -> Result<()> {
    let r = run_verifier_exact(v, &"0".repeat(n as usize), cert)?;
    let acc = r.defined_acceptance()?;
    rep.push(ReportRow::compare(c, name, "x=1/2", format!("n={n}, honest {cert}"), &acc, Cmp::Eq, &rat(1, 1)));
    Ok(())
}

fn soundness(rep: &mut ExperimentReport, c: u32, name: &str, v: &VerifierPfa, n: u64, bound: &Rational) -> Result<()> {
    let s = soundness_search(v, &"0".repeat(n as usize), n as usize + 2)?;
    let input = format!("n={n}, all prefixes <= {}, witness {:?}", n + 2, s.witness.prefix);
    rep.push(ReportRow::compare(c, name, "x=1/2", input, &s.max_acceptance, Cmp::Le, bound));
    Ok(())
}

pub(super) fn upower(_: &super::SuiteOptions) -> Result<ExperimentReport> {
    let x = rat(1, 2);
    let v = build_upower(&x)?;
    let mut rep = ExperimentReport::new();
    for m in 1..=6 {
        let n = 1u64 << m;
        completeness(&mut rep, 4, "UPOWER", &v, n, &honest_cert_upower(n)?)?;
    }
    let bound = &x / (rat(2, 1) + &x);
    for n in [3, 5, 6, 7, 9, 10] {
        soundness(&mut rep, 4, "UPOWER", &v, n, &bound)?;
    }
    Ok(rep)
}

pub(super) fn usquare(_: &super::SuiteOptions) -> Result<ExperimentReport> {
    let x = rat(1, 2);
    let v = build_usquare(&x)?;
    let mut rep = ExperimentReport::new();
    for m in 2..=7u64 {
        completeness(&mut rep, 5, "USQUARE", &v, m * m, &honest_cert_usquare(m * m)?)?;
    }
    let bound = &x / (rat(1, 1) + &x);
    for n in [5, 6, 7, 8, 10] {
        soundness(&mut rep, 5, "USQUARE", &v, n, &bound)?;
    }
    Ok(rep)
}

pub(super) fn upower_k(_: &super::SuiteOptions) -> Result<ExperimentReport> {
    let x = rat(1, 2);
    let v = build_upower_k(&x, 2)?;
    let mut rep = ExperimentReport::new();
    completeness(&mut rep, 6, "UPOWER-k(k=2)", &v, 16, &honest_cert_upower(16)?)?;
    let cert = honest_cert_upower(8)?;
    let r = run_verifier_exact(&v, &"0".repeat(8), &cert)?;
    let rej = r.rejection_probability().unwrap_or_else(|| rat(0, 1));
    let bound = rat(2, 1) / (rat(2, 1) + &x);
    rep.push(ReportRow::compare(6, "UPOWER-k(k=2)", "x=1/2", format!("n=8, UPOWER certificate {cert}"), &rej, Cmp::Ge, &bound));
    Ok(rep)
}

/// Random tapes over the pair alphabet: half perturb the honest tape,
/// half are uniform with a random length.
fn adversarial_tapes(honest: &Tape, symbols: usize, count: usize, seed: u64) -> Vec<Tape> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let tape = if out.len() % 2 == 0 {
            let mut t = honest.clone();
            for _ in 0..rng.random_range(1..=4) {
                let len = t.prefix.len();
                match rng.random_range(0..3) {
                    0 if len > 0 => t.prefix[rng.random_range(0..len)] = rng.random_range(0..symbols),
                    1 if len > 0 => {
                        t.prefix.remove(rng.random_range(0..len));
                    }
                    _ => t.prefix.insert(rng.random_range(0..=len), rng.random_range(0..symbols)),
                }
            }
            t
        } else {
            let len = rng.random_range(0..=80);
            Tape { prefix: (0..len).map(|_| rng.random_range(0..symbols)).collect(), tail: rng.random_range(0..symbols) }
        };
        if tape != *honest {
            out.push(tape);
        }
    }
    out
}

pub(super) fn upower6_subset(opts: &super::SuiteOptions) -> Result<ExperimentReport> {
    let precision = 4;
    let w = "0".repeat(64);
    let cert = honest_cert_upower6(1)?;
    let mut rep = ExperimentReport::new();
    let params = format!("k=1, K={precision}");

    let yes = build_upower6i(&MembershipBits::parse("1")?, precision)?;
    let honest_acc = run_verifier_exact(&yes, &w, &cert)?.defined_acceptance()?;
    rep.push(ReportRow::compare(10, "UPOWER6(I), 1 in I", &params, "n=64, honest", &honest_acc, Cmp::Gt, &rat(3, 4)));

    let no = build_upower6i(&MembershipBits::parse("0")?, precision)?;
    let r = run_verifier_exact(&no, &w, &cert)?;
    let rej = r.rejection_probability().unwrap_or_else(|| rat(0, 1));
    rep.push(ReportRow::compare(10, "UPOWER6(I), 1 not in I", &params, "n=64, honest", &rej, Cmp::Ge, &rat(3, 5)));

    let honest = cert.to_tape(no.certificate_alphabet())?;
    let tapes = adversarial_tapes(&honest, no.certificate_alphabet().len(), 200, opts.seed);
    let mut worst = rat(0, 1);
    for t in &tapes {
        let acc = run_verifier_exact(&no, &w, t)?.acceptance_probability().unwrap_or_else(|| rat(0, 1));
        if acc > worst {
            worst = acc;
        }
    }
    let input = format!("n=64, {} seeded adversarial certificates (seed {})", tapes.len(), opts.seed);
    let mut row = ReportRow::compare(10, "UPOWER6(I), 1 not in I", &params, input, &worst, Cmp::Lt, &honest_acc);
    row.bound = format!("< {} (honest member acceptance)", format_rational(&honest_acc));
    rep.push(row);
    Ok(rep)
}
