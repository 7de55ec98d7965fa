use proptest::prelude::*;

use postpfa::coin::MembershipBits;
use postpfa::rational::{rat, Rational};
use postpfa::verifier::{
    build_upower, build_upower6i, build_upower_k, build_usquare, honest_cert_upower, honest_cert_upower6,
    honest_cert_usquare, run_verifier_exact, soundness_search, soundness_search_with_budget, Certificate,
    CertificateSource, VerifierPfa,
};
use postpfa::zoo::{reference_membership, Language};
use postpfa::Error;

fn zeros(n: u64) -> String {
    "0".repeat(n as usize)
}

fn acceptance(v: &VerifierPfa, n: u64, c: &impl CertificateSource) -> Rational {
    run_verifier_exact(v, &zeros(n), c).unwrap().acceptance_probability().unwrap_or_else(|| rat(0, 1))
}

#[test]
fn honest_certificates() {
    assert_eq!(honest_cert_upower(2).unwrap().prefix, "1$");
    assert_eq!(honest_cert_upower(4).unwrap().prefix, "011$");
    assert_eq!(honest_cert_upower(8).unwrap().prefix, "0001011$");
    assert_eq!(honest_cert_usquare(9).unwrap().prefix, "aaabbb$");
    assert!(matches!(honest_cert_upower(6), Err(Error::NotAMember(_))));
    assert!(matches!(honest_cert_usquare(8), Err(Error::NotAMember(_))));
}

#[test]
fn upower_perfect_completeness() {
    for x in [rat(1, 2), rat(1, 5)] {
        let v = build_upower(&x).unwrap();
        for m in 1..=6 {
            let n = 1 << m;
            assert_eq!(acceptance(&v, n, &honest_cert_upower(n).unwrap()), rat(1, 1), "n={n}");
        }
    }
}

#[test]
fn usquare_perfect_completeness() {
    let v = build_usquare(&rat(1, 2)).unwrap();
    for m in 1..=7u64 {
        assert_eq!(acceptance(&v, m * m, &honest_cert_usquare(m * m).unwrap()), rat(1, 1), "n={}", m * m);
    }
}

#[test]
fn upower_k_completeness() {
    let x = rat(1, 2);
    assert_eq!(acceptance(&build_upower_k(&x, 2).unwrap(), 16, &honest_cert_upower(16).unwrap()), rat(1, 1));
    assert_eq!(acceptance(&build_upower_k(&x, 3).unwrap(), 8, &honest_cert_upower(8).unwrap()), rat(1, 1));
    assert_eq!(acceptance(&build_upower_k(&x, 6).unwrap(), 64, &honest_cert_upower(64).unwrap()), rat(1, 1));
    assert_eq!(acceptance(&build_upower_k(&x, 3).unwrap(), 64, &honest_cert_upower(64).unwrap()), rat(1, 1));
}

#[test]
fn soundness_for_all_short_non_members() {
    let x = rat(1, 2);
    let upower = build_upower(&x).unwrap();
    let usquare = build_usquare(&x).unwrap();
    for n in 0..=10u64 {
        let w = zeros(n);
        if !reference_membership(&Language::Upower, &w) {
            let s = soundness_search(&upower, &w, n as usize + 2).unwrap();
            assert!(s.max_acceptance <= &x / (rat(2, 1) + &x), "upower n={n}: {}", s.max_acceptance);
        }
        if !reference_membership(&Language::Usquare, &w) {
            let s = soundness_search(&usquare, &w, n as usize + 2).unwrap();
            assert!(s.max_acceptance <= &x / (rat(1, 1) + &x), "usquare n={n}: {}", s.max_acceptance);
        }
    }
}

#[test]
fn search_examples() {
    let v = build_upower(&rat(1, 2)).unwrap();
    let s = soundness_search(&v, &zeros(4), 6).unwrap();
    assert_eq!(s.max_acceptance, rat(1, 1));
    assert!(s.witness.equivalent(&honest_cert_upower(4).unwrap()), "{}", s.witness);
    let s = soundness_search(&v, &zeros(5), 7).unwrap();
    assert!(s.max_acceptance <= rat(1, 5));
    // the witness really attains the maximum
    assert_eq!(acceptance(&v, 5, &s.witness), s.max_acceptance);
    assert!(matches!(soundness_search_with_budget(&v, "00", 20, 1000), Err(Error::BudgetExceeded { .. })));
}

#[test]
fn malformed_certificates_lose() {
    let v = build_upower(&rat(1, 2)).unwrap();
    assert!(acceptance(&v, 2, &Certificate::dollar("0$")) < rat(1, 1));
    let sq = build_usquare(&rat(1, 2)).unwrap();
    assert!(acceptance(&sq, 4, &Certificate::dollar("aaa$")) < rat(1, 1));
}

#[test]
fn upower_k_rejects_wrong_exponent() {
    let x = rat(1, 2);
    let v = build_upower_k(&x, 2).unwrap();
    let r = run_verifier_exact(&v, &zeros(8), &honest_cert_upower(8).unwrap()).unwrap();
    assert!(r.rejects_with_at_least(&(rat(2, 1) / (rat(2, 1) + &x))));
}

#[test]
fn upower6_member_and_non_member() {
    let cert = honest_cert_upower6(1).unwrap();
    let yes = build_upower6i(&MembershipBits::parse("1").unwrap(), 4).unwrap();
    assert!(acceptance(&yes, 64, &cert) > rat(3, 4));
    let no = build_upower6i(&MembershipBits::parse("0").unwrap(), 4).unwrap();
    let r = run_verifier_exact(&no, &zeros(64), &cert).unwrap();
    assert!(r.rejects_with_at_least(&rat(3, 5)));
    // not a power of 64 at all
    for n in [32, 63, 65] {
        let r = run_verifier_exact(&yes, &zeros(n), &cert).unwrap();
        assert!(r.rejects_with_at_least(&rat(3, 5)), "n={n}");
    }
}

fn arb_cert() -> impl Strategy<Value = Certificate> {
    (proptest::collection::vec(prop_oneof![Just('0'), Just('1'), Just('$')], 0..14), prop_oneof![Just('0'), Just('1'), Just('$')])
        .prop_map(|(p, t)| Certificate::new(p.into_iter().collect::<String>(), t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn head_discipline_and_mass(n in 0u64..12, c in arb_cert()) {
        let v = build_upower(&rat(1, 2)).unwrap();
        let tape = c.to_tape(v.certificate_alphabet()).unwrap();
        let mut d = v.initial_distribution();
        let input = v.alphabet().tape(&zeros(n)).unwrap();
        for (i, &sym) in input.iter().enumerate() {
            d = d.step(&v, sym, &tape);
            prop_assert!(d.max_head() <= i + 1);
            prop_assert_eq!(d.total(), rat(1, 1));
        }
        prop_assert_eq!(d.outcome(&v), run_verifier_exact(&v, &zeros(n), &c).unwrap());
    }

    #[test]
    fn search_dominates_sampled_certificates(n in 3u64..8, c in arb_cert()) {
        let v = build_usquare(&rat(1, 2)).unwrap();
        let c = Certificate::dollar(c.prefix.replace('0', "a").replace('1', "b"));
        prop_assume!(c.prefix.len() <= n as usize + 2);
        let best = soundness_search(&v, &zeros(n), n as usize + 2).unwrap().max_acceptance;
        prop_assert!(acceptance(&v, n, &c) <= best);
    }
}
