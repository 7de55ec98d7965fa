//! Exact sampling of rational distributions from uniform integers.
//!
//! A row `p_1..p_m` becomes thresholds `ceil(c_j * 2^B)` over the cumulative
//! sums `c_j`; a uniform `B`-bit integer `U` selects the first `j` with
//! `U < ceil(c_j * 2^B)`. The chosen index then has probability within
//! `2^-B` of `p_j`, and exactly `p_j` whenever `p_j * 2^B` is an integer.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::rational::Rational;

#[derive(Debug, Clone, Copy)]
enum Threshold {
    Below(u128),
    Always,
}

#[derive(Debug, Clone)]
pub(crate) struct CumulativeRow {
    thresholds: Vec<Threshold>,
}

impl CumulativeRow {
    pub fn new(probs: impl IntoIterator<Item = Rational>, bits: u32) -> Self {
        debug_assert!((1..=128).contains(&bits));
        let mut cum = Rational::zero();
        let limit = BigUint::from(1u8) << bits;
        let thresholds = probs
            .into_iter()
            .map(|p| {
                cum += p;
                let n = cum.numer().to_biguint().unwrap_or_default() << bits;
                let d = cum.denom().to_biguint().unwrap_or_default();
                let (q, r) = n.div_rem(&d);
                let c = if r.is_zero() { q } else { q + 1u8 };
                if c >= limit {
                    Threshold::Always
                } else {
                    Threshold::Below(c.to_u128().expect("below 2^128"))
                }
            })
            .collect();
        CumulativeRow { thresholds }
    }

    /// Index chosen by the uniform value `u < 2^B`, or `None` for a row whose
    /// mass is below one and `u` falls past it.
    pub fn pick(&self, u: u128) -> Option<usize> {
        self.thresholds.iter().position(|t| match t {
            Threshold::Always => true,
            Threshold::Below(c) => u < *c,
        })
    }
}

pub(crate) fn uniform(rng: &mut impl Rng, bits: u32) -> u128 {
    let u: u128 = rng.random();
    if bits == 128 {
        u
    } else {
        u >> (128 - bits)
    }
}

/// Independent generator for trial `trial` of a run seeded with `seed`.
pub(crate) fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn dyadic_rows_are_exact() {
        let row = CumulativeRow::new([rat(1, 4), rat(3, 4)], 2);
        assert_eq!(row.pick(0), Some(0));
        assert_eq!(row.pick(1), Some(1));
        assert_eq!(row.pick(3), Some(1));
    }

    #[test]
    fn thirds_round_up() {
        let row = CumulativeRow::new([rat(1, 3), rat(1, 3), rat(1, 3)], 4);
        // ceil(16/3) = 6, ceil(32/3) = 11
        assert_eq!(row.pick(5), Some(0));
        assert_eq!(row.pick(6), Some(1));
        assert_eq!(row.pick(10), Some(1));
        assert_eq!(row.pick(11), Some(2));
        assert_eq!(row.pick(15), Some(2));
    }

    #[test]
    fn streams_differ() {
        let a: u64 = trial_rng(7, 0).random();
        let b: u64 = trial_rng(7, 1).random();
        let c: u64 = trial_rng(7, 0).random();
        assert_ne!(a, b);
        assert_eq!(a, c);
    }
}
