use proptest::prelude::*;

use postpfa::engine::enumerate_words;
use postpfa::rational::{rat, Rational};
use postpfa::zoo::{
    build_equal, build_log, equal_event_probs, pad_log, predicted_acceptance, reference_membership,
    strip_log_payload, Family,
};
use postpfa::{run_exact, Error};

const FAMILIES: [Family; 6] = [
    Family::Equal,
    Family::EqualBlocks,
    Family::EqualBlocksF { a: 1, b: 0 },
    Family::EqualBlocksF { a: 2, b: 1 },
    Family::EqualBlocksF { a: 0, b: 3 },
    Family::Log,
];

#[test]
fn engine_matches_closed_forms_on_all_short_words() {
    let x = rat(1, 4);
    for family in FAMILIES {
        let p = family.build(&x).unwrap();
        let mut words = 0;
        enumerate_words(&p, 20, |w, r| {
            words += 1;
            let got = r.acceptance_probability().unwrap_or_else(|| rat(0, 1));
            assert_eq!(got, predicted_acceptance(family, &x, w), "{} on {w:?}", family.name());
        })
        .unwrap();
        assert_eq!(words, (1 << 21) - 1);
    }
}

#[test]
fn member_law_up_to_length_20() {
    for x in [rat(1, 3), rat(1, 10)] {
        let target = rat(1, 1) / (rat(1, 1) + &x);
        let bound = rat(1, 1) / (rat(1, 1) + &x * rat(2, 1));
        for family in [Family::Equal, Family::EqualBlocksF { a: 2, b: 1 }] {
            let p = family.build(&x).unwrap();
            let lang = family.language();
            enumerate_words(&p, 20, |w, r| {
                if reference_membership(&lang, w) {
                    assert_eq!(r.acceptance_probability().as_ref(), Some(&target), "{w}");
                } else {
                    assert!(r.rejects_with_at_least(&bound), "{w}");
                }
            })
            .unwrap();
        }
    }
}

#[test]
fn spot_values() {
    let x = rat(1, 4);
    let members = [
        (Family::EqualBlocks, "010100100"),
        (Family::EqualBlocksF { a: 2, b: 1 }, "01000"),
        (Family::Log, "0100100001"),
    ];
    for (family, w) in members {
        let w = if family == Family::Log { w.trim_end_matches('1') } else { w };
        let r = run_exact(&family.build(&x).unwrap(), w).unwrap();
        assert_eq!(r.acceptance_probability(), Some(rat(4, 5)), "{w}");
    }
    let p = build_equal(&x).unwrap();
    assert_eq!(run_exact(&p, "11").unwrap().acceptance_probability(), Some(rat(0, 1)));
    let log = build_log(&x).unwrap();
    for w in ["1", "00100", "010001"] {
        assert_eq!(run_exact(&log, w).unwrap().acceptance_probability(), Some(rat(0, 1)), "{w}");
    }
}

#[test]
fn parameter_range() {
    for x in [rat(0, 1), rat(1, 2), rat(3, 4), rat(-1, 8)] {
        assert!(matches!(build_equal(&x), Err(Error::BadParameter(_))), "{x}");
    }
    assert!(Family::EqualBlocksF { a: 0, b: 0 }.build(&rat(1, 4)).is_err());
}

#[test]
fn log_padding_round_trips() {
    for w in ["", "0", "1", "0110", "111000"] {
        let padded = pad_log(w);
        assert_eq!(strip_log_payload(&padded).as_deref(), Some(w));
    }
}

proptest! {
    #[test]
    fn equal_oracle(m in 1u64..=8, n in 1u64..=8, d in 3i64..=12) {
        let x = rat(1, d);
        let p = build_equal(&x).unwrap();
        let w = format!("{}1{}", "0".repeat(m as usize), "0".repeat(n as usize));
        let got = run_exact(&p, &w).unwrap().acceptance_probability().unwrap();
        let e = equal_event_probs(&x, m, n);
        prop_assert_eq!(got.clone(), e.acceptance(&x));
        if m == n {
            prop_assert_eq!(got, Rational::from_integer(1.into()) / (rat(1, 1) + &x));
        }
    }
}
