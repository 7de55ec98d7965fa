use num_traits::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use postpfa::engine::{random_pfa, restart_statistics, simulate_monte_carlo, MonteCarlo};
use postpfa::rational::{rat, Rational};
use postpfa::zoo::build_equal;
use postpfa::{run_exact, Alphabet, Error, PostPfa};

fn accept_on_left_end() -> PostPfa {
    let mut b = PostPfa::builder(Alphabet::unary());
    b.state("s");
    b.absorbing("acc").absorbing("rej");
    b.transition("s", '¢', "acc", rat(1, 1)).unwrap();
    for c in ['0', '$'] {
        b.transition("s", c, "s", rat(1, 1)).unwrap();
    }
    b.designate("s", "acc", "rej");
    b.build().unwrap()
}

fn never_decides() -> PostPfa {
    let mut b = PostPfa::builder(Alphabet::unary());
    b.state("s");
    b.absorbing("acc").absorbing("rej");
    for c in ['¢', '0', '$'] {
        b.transition("s", c, "s", rat(1, 1)).unwrap();
    }
    b.designate("s", "acc", "rej");
    b.build().unwrap()
}

#[test]
fn trivial_acceptor() {
    let p = accept_on_left_end();
    let r = run_exact(&p, "").unwrap();
    assert_eq!(r.accept_mass, rat(1, 1));
    assert_eq!(r.reject_mass, rat(0, 1));
    assert_eq!(r.acceptance_probability(), Some(rat(1, 1)));
    let s = restart_statistics(&p, "").unwrap();
    assert_eq!((s.acceptance, s.expected_passes), (rat(1, 1), rat(1, 1)));
    for seed in [0, 7, 99] {
        let mc = simulate_monte_carlo(&p, "", 100, seed).unwrap();
        assert_eq!(mc.accepted, 100);
        assert_eq!(mc.restarts(), 0);
    }
}

#[test]
fn undecided_runs() {
    let p = never_decides();
    let r = run_exact(&p, "00").unwrap();
    assert_eq!(r.acceptance_probability(), None);
    assert_eq!(restart_statistics(&p, "00"), Err(Error::PostselectionUndefined));
    let cap = MonteCarlo { restart_cap: 50, ..MonteCarlo::default() };
    assert_eq!(cap.run(&p, "0", 3, 1), Err(Error::RestartCapExceeded { cap: 50 }));
}

#[test]
fn equal_examples() {
    let p = build_equal(&rat(1, 4)).unwrap();
    assert!(p.validate().is_valid());
    let r = run_exact(&p, "010").unwrap();
    assert_eq!((r.accept_mass.clone(), r.reject_mass.clone()), (rat(1, 512), rat(1, 2048)));
    assert_eq!(r.acceptance_probability(), Some(rat(4, 5)));
    assert_eq!(restart_statistics(&p, "010").unwrap().expected_passes, rat(2048, 5));
    assert_eq!(run_exact(&p, "0100").unwrap().rejection_probability(), Some(rat(257, 385)));
    assert_eq!(simulate_monte_carlo(&p, "010", 0, 1), Err(Error::EmptyTrialSet));
}

#[test]
fn monte_carlo_near_exact_value() {
    let p = build_equal(&rat(1, 4)).unwrap();
    let mc = simulate_monte_carlo(&p, "010", 100_000, 5).unwrap();
    assert!((mc.estimate() - 0.8).abs() < 0.01, "{}", mc.estimate());
    assert!(mc.within_sigmas(&rat(4, 5), 5));
}

#[test]
fn monte_carlo_is_reproducible() {
    let p = build_equal(&rat(1, 3)).unwrap();
    let a = simulate_monte_carlo(&p, "00100", 2_000, 42).unwrap();
    let b = simulate_monte_carlo(&p, "00100", 2_000, 42).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, simulate_monte_carlo(&p, "00100", 2_000, 43).unwrap());
}

#[test]
fn end_markers_are_not_input() {
    let p = build_equal(&rat(1, 4)).unwrap();
    assert_eq!(run_exact(&p, "0$0"), Err(Error::UnknownSymbol('$')));
    assert_eq!(run_exact(&p, "02"), Err(Error::UnknownSymbol('2')));
}

#[test]
fn restart_consistency_on_random_automata() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let alphabet = Alphabet::binary();
    let mut checked = 0;
    let mut attempt = 0u64;
    while checked < 100 {
        attempt += 1;
        let p = random_pfa(&mut rng, 3 + (attempt % 4) as usize, &alphabet);
        let w: String = (0..attempt % 9).map(|i| if (attempt >> i) & 1 == 1 { '1' } else { '0' }).collect();
        let r = run_exact(&p, &w).unwrap();
        if r.decision_mass() < rat(1, 1000) {
            continue;
        }
        checked += 1;
        let mc = simulate_monte_carlo(&p, &w, 2_000, attempt).unwrap();
        assert!(mc.within_sigmas(&r.acceptance_probability().unwrap(), 5), "attempt {attempt}");
    }
}

fn arb_word() -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![Just('0'), Just('1')], 0..10).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mass_is_conserved(seed in any::<u64>(), states in 3usize..7, w in arb_word()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_pfa(&mut rng, states, &Alphabet::binary());
        let mut d = p.initial_distribution();
        for sym in p.alphabet().tape(&w).unwrap() {
            d = d.step(&p, sym);
            prop_assert_eq!(d.total(), Rational::one());
            prop_assert!(d.entries().iter().all(|e| e.1 > rat(0, 1) && e.1 <= rat(1, 1)));
        }
        let r = run_exact(&p, &w).unwrap();
        prop_assert_eq!(&r.accept_mass + &r.reject_mass + &r.other_mass, Rational::one());
        prop_assert_eq!(d.outcome(&p), r);
    }

    #[test]
    fn acceptance_is_normalized_mass(seed in any::<u64>(), w in arb_word()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_pfa(&mut rng, 4, &Alphabet::binary());
        let r = run_exact(&p, &w).unwrap();
        if let Some(a) = r.acceptance_probability() {
            prop_assert_eq!(a.clone() * r.decision_mass(), r.accept_mass.clone());
            prop_assert_eq!(restart_statistics(&p, &w).unwrap().expected_passes * r.decision_mass(), rat(1, 1));
        }
    }
}
