//! Recognizers for block-equality languages over `{0, 1}`.
//!
//! Every construction follows one pattern. A deterministic shape check runs
//! alongside the probabilistic part; a word of the wrong shape sends all of
//! its mass to the rejecting state. On well-shaped words one half of the mass
//! follows an accepting event and the other half a rejecting event, each a
//! product of per-zero survival factors `x^c`. The events are arranged so
//! their probabilities coincide exactly on members, while on non-members the
//! rejecting event dominates by a factor of at least `1 / x`.

mod events;
mod log;
mod membership;
mod pairs;

pub use events::{equal_event_probs, predicted_acceptance, shape_event_probs, EventProbs};
pub use log::{build_log, pad_log, strip_log_payload};
pub use membership::{reference_membership, Language};
pub use pairs::{build_equal, build_equal_blocks, build_equal_blocks_f};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::PostPfa;

/// The block-equality families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `0^m 1 0^m`.
    Equal,
    /// Concatenations of `0^m 1 0^m 1` pairs, trailing `1` dropped.
    EqualBlocks,
    /// Pairs `0^m 1 0^(a m + b)`.
    EqualBlocksF { a: u32, b: u32 },
    /// `0 1 0^2 1 0^4 ... 1 0^(2^t)`.
    Log,
}

impl Family {
    pub fn build(self, x: &Rational) -> Result<PostPfa> {
        match self {
            Family::Equal => build_equal(x),
            Family::EqualBlocks => build_equal_blocks(x),
            Family::EqualBlocksF { a, b } => build_equal_blocks_f(x, a, b),
            Family::Log => build_log(x),
        }
    }

    pub fn language(self) -> Language {
        match self {
            Family::Equal => Language::Equal,
            Family::EqualBlocks => Language::EqualBlocks,
            Family::EqualBlocksF { a, b } => Language::EqualBlocksF { a, b },
            Family::Log => Language::Log,
        }
    }

    pub fn name(self) -> String {
        match self {
            Family::Equal => "EQUAL".into(),
            Family::EqualBlocks => "EQUAL-BLOCKS".into(),
            Family::EqualBlocksF { a, b } => format!("EQUAL-BLOCKS-F(a={a},b={b})"),
            Family::Log => "LOG".into(),
        }
    }
}

/// Members are accepted with `1 / (1 + x)`, so `x` must be below one half
/// for both error bounds to beat one third.
pub(crate) fn check_x(x: &Rational) -> Result<()> {
    if *x <= rat(0, 1) || *x >= rat(1, 2) {
        return Err(Error::bad(format!("x must lie in (0, 1/2), got {x}")));
    }
    Ok(())
}
