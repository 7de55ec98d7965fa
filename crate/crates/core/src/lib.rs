//! Exact and sampled evaluation of postselecting realtime probabilistic
//! automata.
//!
//! A postselecting automaton has two designated states: a run that ends
//! anywhere else is discarded and restarted. The acceptance probability of a
//! word is `a / (a + r)` where `a` and `r` are the masses reaching the
//! accepting and rejecting states after `¢ w $`.
//!
//! The crate provides
//! - [`engine`]: plain PFAs, exact runs, word enumeration and Monte Carlo,
//! - [`zoo`]: recognizers for block-equality languages,
//! - [`verifier`]: PFAs reading a one-way certificate and a soundness search,
//! - [`counter`]: PFAs with one integer counter,
//! - [`coin`]: dyadic coins encoding bit strings and the bit-guessing rule,
//! - [`document`] and [`report`]: file formats used by the command line tool,
//! - [`suite`]: the named experiment suites behind `postpfa suite`.

pub mod alphabet;
pub mod coin;
pub mod counter;
pub mod document;
pub mod engine;
pub mod error;
mod explore;
pub mod rational;
pub mod report;
mod sampler;
pub mod suite;
pub mod validation;
pub mod verifier;
pub mod zoo;

pub use alphabet::{Alphabet, SymbolId};
pub use engine::{run_exact, PostPfa, RunResult};
pub use error::{Error, Result};
pub use rational::Rational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/postselection.md")]
    mod postselection {}
    #[doc = include_str!("../../../book/src/block-languages.md")]
    mod block_languages {}
    #[doc = include_str!("../../../book/src/verifiers.md")]
    mod verifiers {}
    #[doc = include_str!("../../../book/src/counters.md")]
    mod counters {}
    #[doc = include_str!("../../../book/src/coins.md")]
    mod coins {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
