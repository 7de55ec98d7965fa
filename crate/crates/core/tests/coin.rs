use proptest::prelude::*;

use postpfa::coin::{
    encode_coin, exact_guess_success, guess_bit_from_heads, guess_success_bounds, mc_guess_success, tosses_for,
    DyadicCoin, MembershipBits,
};
use postpfa::rational::{inv_pow2, rat};
use postpfa::Error;

fn bits(s: &str) -> MembershipBits {
    s.parse().unwrap()
}

#[test]
fn encodings() {
    assert_eq!(encode_coin(&bits("1"), 1).p_hat, rat(5, 8));
    assert_eq!(encode_coin(&bits("0"), 1).p_hat, rat(1, 8));
    assert_eq!(encode_coin(&bits("00"), 2).p_hat, rat(9, 64));
    assert_eq!(encode_coin(&bits("1"), 3).error_bound, inv_pow2(9));
    assert_eq!(tosses_for(1).unwrap(), 64);
}

#[test]
fn guesses() {
    assert!(!guess_bit_from_heads(1, 0).unwrap());
    assert!(guess_bit_from_heads(1, 32).unwrap());
    assert!(!guess_bit_from_heads(1, 31).unwrap());
    assert!(matches!(guess_bit_from_heads(1, 65), Err(Error::OutOfRange(_))));
}

#[test]
fn exact_success_at_k1() {
    for bit in [false, true] {
        for precision in [1, 4] {
            let coin = encode_coin(&MembershipBits::new(vec![bit]), precision);
            let s = exact_guess_success(1, &coin, bit).unwrap();
            assert!(s >= rat(3, 4), "bit {bit}, K={precision}: {s}");
            let (lo, hi) = guess_success_bounds(1, &coin.p_hat, &(&coin.p_hat + &coin.error_bound), bit).unwrap();
            assert!(lo <= s && s <= hi);
            if precision == 4 {
                // the whole truncation interval clears the bound
                assert!(lo >= rat(3, 4), "{lo}");
            }
        }
    }
    let zero = DyadicCoin { p_hat: rat(0, 1), error_bound: inv_pow2(3), precision: 1 };
    assert_eq!(exact_guess_success(1, &zero, false).unwrap(), rat(1, 1));
    assert_eq!(exact_guess_success(1, &zero, true).unwrap(), rat(0, 1));
    let coin = encode_coin(&bits("11"), 4);
    assert!(matches!(exact_guess_success(2, &coin, true), Err(Error::InfeasibleScale(_))));
}

#[test]
fn sampled_success() {
    for bit in [false, true] {
        let coin = encode_coin(&MembershipBits::new(vec![bit]), 4);
        let exact = exact_guess_success(1, &coin, bit).unwrap();
        let mc = mc_guess_success(1, &coin, bit, 100_000, 9).unwrap();
        assert!(mc.within_sigmas(&exact, 3), "{} vs {exact}", mc.rate());
        assert_eq!(mc, mc_guess_success(1, &coin, bit, 100_000, 9).unwrap());
    }
    let coin = encode_coin(&bits("11"), 4);
    assert!(mc_guess_success(2, &coin, true, 10_000, 2).unwrap().rate() >= 0.7);
}

proptest! {
    #[test]
    fn shift_form_matches_division_form(k in 1u32..=3, h in 0u64..=262_144) {
        let n = tosses_for(k).unwrap();
        prop_assume!(h <= n);
        let by_division = (h / 8u64.pow(k)) % 8 >= 4;
        prop_assert_eq!(guess_bit_from_heads(k, h).unwrap(), by_division);
        prop_assert_eq!(by_division, (h >> (3 * k + 2)) & 1 == 1);
    }

    #[test]
    fn encoding_is_monotone(v in proptest::collection::vec(any::<bool>(), 1..8), i in 0usize..8) {
        prop_assume!(i < v.len() && !v[i]);
        let precision = v.len();
        let before = encode_coin(&MembershipBits::new(v.clone()), precision).p_hat;
        let mut w = v.clone();
        w[i] = true;
        let after = encode_coin(&MembershipBits::new(w), precision).p_hat;
        prop_assert_eq!(after - before, inv_pow2(3 * (i as u64 + 1) - 2));
    }

    #[test]
    fn truncation_error_is_bounded(v in proptest::collection::vec(any::<bool>(), 1..10), k in 1usize..10) {
        let full = encode_coin(&MembershipBits::new(v.clone()), 12);
        let cut = encode_coin(&MembershipBits::new(v), k);
        prop_assert!(cut.p_hat <= full.p_hat);
        prop_assert!(&full.p_hat - &cut.p_hat < cut.error_bound);
    }
}
