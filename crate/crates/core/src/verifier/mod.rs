//! Postselecting PFAs that read a one-way certificate.
//!
//! Alongside the input, the machine reads a certificate from a tape whose
//! head either stays or advances by one cell per step. A language has a
//! verifier when some certificate raises every member's acceptance above
//! the threshold while no certificate does so for a non-member.

mod certificate;
mod machine;
mod soundness;
mod upower;
mod upower6;
mod usquare;

pub use certificate::{Certificate, CertificateSource, Tape, TwoTrackCertificate};
pub use machine::{run_verifier_exact, HeadMove, VerifierDistribution, VerifierPfa, VerifierRow};
pub use soundness::{soundness_search, soundness_search_with_budget, SoundnessResult, DEFAULT_SEARCH_BUDGET};
pub use upower::{build_upower, build_upower_k, honest_cert_upower};
pub use upower6::{build_upower6_coin, build_upower6i, honest_cert_upower6};
pub use usquare::{build_usquare, honest_cert_usquare};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

pub(crate) fn check_verifier_x(x: &Rational) -> Result<()> {
    if *x <= rat(0, 1) || *x >= rat(1, 1) {
        return Err(Error::bad(format!("x must lie in (0, 1), got {x}")));
    }
    Ok(())
}
