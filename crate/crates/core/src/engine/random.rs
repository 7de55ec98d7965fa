use rand::Rng;

use crate::alphabet::Alphabet;
use crate::rational::rat;

use super::PostPfa;

/// A random dense PFA with `states` states (at least 3) and integer weights
/// in `0..=9` normalized per row. State 0 starts, 1 accepts, 2 rejects; the
/// postselection states are absorbing.
pub fn random_pfa(rng: &mut impl Rng, states: usize, alphabet: &Alphabet) -> PostPfa {
    assert!(states >= 3);
    let k = alphabet.symbol_count();
    let rows = (0..states)
        .map(|s| {
            (0..k)
                .map(|_| {
                    if s == 1 || s == 2 {
                        return vec![(s, rat(1, 1))];
                    }
                    let mut w: Vec<i64> = (0..states).map(|_| rng.random_range(0..10)).collect();
                    let mut total: i64 = w.iter().sum();
                    if total == 0 {
                        w[rng.random_range(0..states)] = 1;
                        total = 1;
                    }
                    w.iter()
                        .enumerate()
                        .filter(|(_, &x)| x > 0)
                        .map(|(t, &x)| (t, rat(x, total)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let names = (0..states).map(|i| format!("q{i}")).collect();
    PostPfa::new(alphabet.clone(), names, 0, 1, 2, rows).expect("well-formed by construction")
}
