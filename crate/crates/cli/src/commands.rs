use std::fs;
use std::path::Path;

use postpfa::coin::{encode_coin, exact_guess_success, mc_guess_success, MembershipBits};
use postpfa::counter::{build_dima3, build_dima3i, run_pca_exact, run_pca_mc_with};
use postpfa::document::{parse, serialize, Automaton};
use postpfa::engine::MonteCarlo;
use postpfa::rational::{decimal, format_rational, parse_rational, Rational};
use postpfa::report::ExperimentReport;
use postpfa::suite::{resolve, run_suite, suites, SuiteOptions};
use postpfa::verifier::{
    build_upower, build_upower6i, build_upower_k, build_usquare, honest_cert_upower, honest_cert_upower6,
    honest_cert_usquare, run_verifier_exact, soundness_search, Certificate,
};
use postpfa::zoo::Family;
use postpfa::{run_exact, RunResult};

use crate::args::*;
use crate::config::{pick, Config};

/// Why a command stopped: a usage problem (exit 2) or a failure (exit 1).
#[derive(Debug)]
pub enum Exit {
    Usage(String),
    Failure(String),
}

impl From<postpfa::Error> for Exit {
    fn from(e: postpfa::Error) -> Self {
        Exit::Failure(e.to_string())
    }
}

type Out = Result<String, Exit>;

fn required<T>(v: Option<T>, flag: &str) -> Result<T, Exit> {
    v.ok_or_else(|| Exit::Usage(format!("--{flag} is required here")))
}

fn rational_flag(v: &Option<String>, flag: &str) -> Result<Rational, Exit> {
    let s = required(v.as_deref(), flag)?;
    parse_rational(s).map_err(|_| Exit::Usage(format!("--{flag}: {s:?} is not a rational p/q")))
}

fn bits_flag(v: &Option<String>) -> Result<MembershipBits, Exit> {
    let s = required(v.as_deref(), "bits")?;
    MembershipBits::parse(s).map_err(|_| Exit::Usage(format!("--bits: {s:?} is not a 0/1 string")))
}

fn load(path: &Path) -> Result<Automaton, Exit> {
    let text = fs::read_to_string(path).map_err(|e| Exit::Failure(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Exit::Failure(format!("{}: {e}", path.display())))
}

fn fmt_rat(r: &Rational) -> String {
    format!("{} ({})", format_rational(r), decimal(r, 12))
}

fn describe(r: &RunResult) -> String {
    let mut s = format!(
        "accept_mass      {}\nreject_mass      {}\nother_mass       {}\n",
        format_rational(&r.accept_mass),
        format_rational(&r.reject_mass),
        format_rational(&r.other_mass)
    );
    match (r.acceptance_probability(), r.expected_passes()) {
        (Some(a), Some(e)) => {
            s += &format!("acceptance       {}\nexpected_passes  {}\n", fmt_rat(&a), fmt_rat(&e));
        }
        _ => s += "acceptance       undefined\n",
    }
    s
}

pub fn build(a: &BuildArgs, cfg: &Config) -> Out {
    let precision = |bits: &MembershipBits| pick(a.precision, cfg.precision, bits.len().max(4));
    let m: Automaton = match a.family {
        Construction::Equal => Family::Equal.build(&rational_flag(&a.x, "x")?)?.into(),
        Construction::EqualBlocks => Family::EqualBlocks.build(&rational_flag(&a.x, "x")?)?.into(),
        Construction::EqualBlocksF => {
            let f = Family::EqualBlocksF { a: required(a.a, "a")?, b: required(a.b, "b")? };
            f.build(&rational_flag(&a.x, "x")?)?.into()
        }
        Construction::Log => Family::Log.build(&rational_flag(&a.x, "x")?)?.into(),
        Construction::Upower => build_upower(&rational_flag(&a.x, "x")?)?.into(),
        Construction::UpowerK => build_upower_k(&rational_flag(&a.x, "x")?, required(a.k, "k")?)?.into(),
        Construction::Usquare => build_usquare(&rational_flag(&a.x, "x")?)?.into(),
        Construction::Upower6 => {
            let bits = bits_flag(&a.bits)?;
            build_upower6i(&bits, precision(&bits))?.into()
        }
        Construction::Dima3 => build_dima3(&rational_flag(&a.x, "x")?)?.into(),
        Construction::Dima3Subset => {
            let bits = bits_flag(&a.bits)?;
            build_dima3i(&rational_flag(&a.x, "x")?, &bits, precision(&bits))?.into()
        }
    };
    let text = serialize(&m);
    match &a.out {
        Some(path) => {
            fs::write(path, text + "\n").map_err(|e| Exit::Failure(format!("{}: {e}", path.display())))?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(text + "\n"),
    }
}

fn certificate(c: &CertificateArg) -> Result<Certificate, Exit> {
    let prefix = required(c.cert.clone(), "cert")?;
    let mut tail = c.tail.chars();
    match (tail.next(), tail.next()) {
        (Some(t), None) => Ok(Certificate::new(prefix, t)),
        _ => Err(Exit::Usage("--tail must be a single symbol".into())),
    }
}

pub fn run(a: &RunArgs) -> Out {
    let r = match load(&a.automaton)? {
        Automaton::Pfa(p) => run_exact(&p, &a.input)?,
        Automaton::Verifier(v) => run_verifier_exact(&v, &a.input, &certificate(&a.certificate)?)?,
        Automaton::Pca(p) => run_pca_exact(&p, &a.input)?,
    };
    Ok(describe(&r))
}

pub fn mc(a: &McArgs, cfg: &Config) -> Out {
    let trials = pick(a.trials, cfg.trials, 100_000);
    let seed = pick(a.seed, cfg.seed, 1);
    let engine = MonteCarlo { restart_cap: pick(a.restart_cap, cfg.restart_cap, 1_000_000), ..MonteCarlo::default() };
    let est = match load(&a.automaton)? {
        Automaton::Pfa(p) => engine.run(&p, &a.input, trials, seed)?,
        Automaton::Pca(p) => run_pca_mc_with(&engine, &p, &a.input, trials, seed)?,
        Automaton::Verifier(_) => return Err(Exit::Usage("mc runs pfa and pca documents only".into())),
    };
    Ok(format!(
        "trials           {}\nseed             {seed}\naccepted         {}\nestimate         {}\nmean_passes      {}\n",
        est.trials,
        est.accepted,
        fmt_rat(&est.accepted_fraction()),
        fmt_rat(&est.mean_passes())
    ))
}

pub fn cert(a: &CertArgs) -> Out {
    Ok(match a.protocol {
        Protocol::Upower => format!("{}\n", honest_cert_upower(a.n)?),
        Protocol::Usquare => format!("{}\n", honest_cert_usquare(a.n)?),
        Protocol::Upower6 => {
            let k = (1..=3u32).find(|k| 1u64 << (6 * k) == a.n);
            let k = k.ok_or_else(|| Exit::Failure(format!("not a member: {} is not 64, 4096 or 262144", a.n)))?;
            let c = honest_cert_upower6(k)?;
            format!("{}\n{}\n", c.track1, c.track2)
        }
    })
}

pub fn soundness(a: &SoundnessArgs, cfg: &Config) -> Out {
    let Automaton::Verifier(v) = load(&a.automaton)? else {
        return Err(Exit::Usage("soundness needs a verifier document".into()));
    };
    let max = pick(a.max_prefix, cfg.max_prefix, a.input.chars().count() + 2);
    let s = soundness_search(&v, &a.input, max)?;
    Ok(format!(
        "max_prefix       {max}\nmax_acceptance   {}\nwitness          {}\nruns             {}\n",
        fmt_rat(&s.max_acceptance),
        s.witness,
        s.runs
    ))
}

pub fn coin(a: &CoinArgs, cfg: &Config) -> Out {
    let bits = MembershipBits::parse(&a.bits).map_err(|_| Exit::Usage(format!("--bits: {:?} is not a 0/1 string", a.bits)))?;
    let precision = pick(a.precision, cfg.precision, (a.k as usize).max(bits.len()).max(4));
    let coin = encode_coin(&bits, precision);
    let truth = bits.bit(a.k as usize);
    let mut s = format!(
        "p_hat            {}\nerror_bound      {}\nbit              {}\n",
        fmt_rat(&coin.p_hat),
        format_rational(&coin.error_bound),
        u8::from(truth)
    );
    if a.exact {
        s += &format!("success          {}\n", fmt_rat(&exact_guess_success(a.k, &coin, truth)?));
    } else {
        let trials = pick(a.trials, cfg.trials, 100_000);
        let seed = pick(a.seed, cfg.seed, 1);
        let g = mc_guess_success(a.k, &coin, truth, trials, seed)?;
        s += &format!("trials           {trials}\nseed             {seed}\nsuccess_rate     {}\n", fmt_rat(&g.as_rational()));
    }
    Ok(s)
}

pub fn suite(a: &SuiteArgs, cfg: &Config) -> Out {
    if a.list {
        return Ok(suites().map(|(id, name)| format!("{id:>2} {name}\n")).collect());
    }
    let ids: Vec<u32> = if a.name == "all" {
        suites().map(|(id, _)| id).collect()
    } else {
        vec![resolve(&a.name).map_err(|e| Exit::Usage(e.to_string()))?]
    };
    let opts = SuiteOptions { seed: pick(a.seed, cfg.seed, SuiteOptions::default().seed), trials: a.trials.or(cfg.trials) };
    let mut report = ExperimentReport::new();
    let mut summary = String::new();
    let mut ok = true;
    for id in ids {
        let run = run_suite(id, &opts)?;
        ok &= run.passed();
        summary += &format!(
            "criterion {:>2} {:<15} {} ({:.2?})\n",
            run.id,
            run.name,
            if run.passed() { "PASS" } else { "FAIL" },
            run.elapsed
        );
        report.extend(run.report);
    }
    let csv = report.to_csv()?;
    if let Some(path) = &a.csv {
        fs::write(path, &csv).map_err(|e| Exit::Failure(format!("{}: {e}", path.display())))?;
    }
    let body = match pick(a.format, cfg.format, Format::Text) {
        Format::Text => format!("{report}{summary}"),
        Format::Csv => csv,
        Format::Json => report.to_json() + "\n",
    };
    if ok {
        Ok(body)
    } else {
        print!("{body}");
        Err(Exit::Failure("some checks failed".into()))
    }
}
