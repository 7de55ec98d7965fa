//! Postselecting PFAs with one integer counter.

mod dima3;
mod machine;

pub use dima3::{build_dima3, build_dima3_coin, dima3_member};
pub use machine::{
    run_pca_exact, run_pca_interval, run_pca_mc, run_pca_mc_with, CounterDistribution, CounterOp, CounterRow,
    IntervalResult, PostPca,
};

use crate::coin::{encode_coin, MembershipBits};
use crate::error::Result;
use crate::rational::Rational;

/// The subset recognizer with its coin truncated to `precision` groups.
pub fn build_dima3i(y: &Rational, bits: &MembershipBits, precision: usize) -> Result<PostPca> {
    build_dima3_coin(y, &encode_coin(bits, precision).p_hat)
}
