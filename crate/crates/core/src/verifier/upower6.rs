//! Verifier for `{ 0^(64^k) : k in I }` with a coin encoding `I`.
//!
//! The certificate has two tracks. Track 1 is the certificate for
//! `0^(2^(6m))` and track 2 the certificate for `0^(m^2)`; on `n = 64^k` the
//! second track has `2^(3k) - 1` blocks of `2^(3k)` letters. Three paths of
//! equal weight run:
//!
//! 1. the block-count-modulo-6 power check on track 1, paired with an
//!    accepting path worth `2^(-n-5)`,
//! 2. the square check on track 2, paired with an accepting path worth
//!    `2^(-n-5)`,
//! 3. a coin path that, at each input symbol, advances the track-2 head on
//!    heads and stays on tails (and quits with probability one half). At
//!    the end the head sits in block `floor(H / 2^(3k))`, whose index mod 8
//!    is the bit guess; the path then decides with weight `2^(-n-2)`.
//!
//! On a member with an honest certificate paths 1 and 2 never reject, so the
//! acceptance is `(1 + 4 s) / 5` where `s` is the probability the guess is 1.
//!
//! With all `64^k` tosses heads the head lands on the trailing `$`, which
//! counts as one block past the last; the guess is then 1 where the reading
//! rule gives 0. This changes the guess probability by at most `p^(64^k)`.
//! Inputs shorter than 64 need no special case: path 1 rejects every
//! length that is not a power of 64 with weight dwarfing the accepting paths.

use num_traits::One;

use crate::alphabet::{Alphabet, LEFT, RIGHT};
use crate::coin::{encode_coin, MembershipBits};
use crate::error::{Error, Result};
use crate::explore::explore;
use crate::rational::{rat, Rational};

use super::certificate::TwoTrackCertificate;
use super::machine::{HeadMove, VerifierPfa};
use super::upower::{honest_cert_upower, part_end, part_letter, Fmt, Out, Part};
use super::usquare::{honest_cert_usquare, sq_end, sq_letter, Fmt2, SqPart};

pub(crate) fn pair_cert_alphabet() -> Vec<String> {
    let mut v = Vec::new();
    for a in ['0', '1', '$'] {
        for b in ['a', 'b', '$'] {
            v.push(format!("{a}{b}"));
        }
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Init,
    Accept,
    Reject,
    PowerAcc,
    Power(Part),
    SquareAcc,
    Square(SqPart),
    /// Last track-2 symbol seen and the number of letter changes mod 8.
    Coin(usize, u8),
    Fail,
    Sink,
    Settled,
}

/// The verifier with coin `p_hat` truncated to `precision` groups.
pub fn build_upower6i(bits: &MembershipBits, precision: usize) -> Result<VerifierPfa> {
    build_upower6_coin(&encode_coin(bits, precision).p_hat)
}

/// The same verifier with an arbitrary heads probability `p`.
pub fn build_upower6_coin(p: &Rational) -> Result<VerifierPfa> {
    if *p < rat(0, 1) || *p > rat(1, 1) {
        return Err(Error::bad("coin bias must be a probability"));
    }
    let roots = [Node::Init, Node::Accept, Node::Reject];
    let t = explore(&roots, 3 * 9, |n, key| step(p, *n, key / 9, key % 9));
    Ok(VerifierPfa::from_table(Alphabet::unary(), pair_cert_alphabet(), t))
}

fn step(p: &Rational, n: Node, sym: usize, c: usize) -> Vec<(Node, HeadMove, Rational)> {
    let one = Rational::one;
    let stay = |n: Node, pr: Rational| (n, HeadMove::Stay, pr);
    let (c1, c2) = (c / 3, c % 3);
    match (n, sym) {
        (Node::Accept | Node::Reject | Node::Settled, _) => vec![stay(n, one())],
        (Node::Init, LEFT) => vec![
            stay(Node::PowerAcc, rat(1, 6)),
            stay(Node::Power(Part::Main(Fmt::BlockStart, 0)), rat(1, 6)),
            stay(Node::SquareAcc, rat(1, 12)),
            stay(Node::Square(SqPart::Spawn(Fmt2::Start)), rat(1, 6)),
            stay(Node::Square(SqPart::Main(Fmt2::Start)), rat(1, 12)),
            stay(Node::Coin(c2, 0), rat(1, 3)),
        ],
        (Node::Init, _) => vec![stay(Node::Reject, one())],
        (_, LEFT) => vec![stay(n, one())],
        (_, RIGHT) => finish(n, c1, c2),
        (Node::PowerAcc | Node::SquareAcc, _) => vec![stay(n, rat(1, 2)), stay(Node::Sink, rat(1, 2))],
        (Node::Power(part), _) => lift(part_letter(part, c1, 6), Node::Power),
        (Node::Square(part), _) => lift(sq_letter(part, c2), Node::Square),
        (Node::Coin(last, j), _) => {
            let j = if c2 != last { (j + 1) % 8 } else { j };
            let half = rat(1, 2);
            vec![
                (Node::Coin(c2, j), HeadMove::Advance, p * &half),
                (Node::Coin(c2, j), HeadMove::Stay, (one() - p) * &half),
                stay(Node::Sink, half),
            ]
        }
        (Node::Fail | Node::Sink, _) => vec![stay(n, one())],
    }
}

fn lift<P>(v: Vec<(Out<P>, Rational)>, wrap: impl Fn(P) -> Node) -> Vec<(Node, HeadMove, Rational)> {
    v.into_iter()
        .map(|(o, pr)| match o {
            Out::Go(q, mv) => (wrap(q), mv, pr),
            Out::Fail => (Node::Fail, HeadMove::Stay, pr),
            Out::Pass => (Node::Sink, HeadMove::Stay, pr),
        })
        .collect()
}

fn finish(n: Node, _c1: usize, c2: usize) -> Vec<(Node, HeadMove, Rational)> {
    let one = Rational::one;
    let end = |o: Out<()>| match o {
        Out::Fail => vec![(Node::Reject, HeadMove::Stay, one())],
        _ => vec![(Node::Settled, HeadMove::Stay, one())],
    };
    let decide = |target: Node, pr: Rational| {
        vec![(target, HeadMove::Stay, pr.clone()), (Node::Settled, HeadMove::Stay, one() - pr)]
    };
    match n {
        Node::PowerAcc => decide(Node::Accept, rat(1, 16)),
        Node::SquareAcc => decide(Node::Accept, rat(1, 8)),
        Node::Power(part) => end(erase(part_end(part))),
        Node::Square(part) => end(erase(sq_end(part, c2))),
        Node::Coin(last, j) => {
            let j = if c2 != last { (j + 1) % 8 } else { j };
            let target = if j >= 4 { Node::Accept } else { Node::Reject };
            decide(target, rat(1, 4))
        }
        Node::Fail => vec![(Node::Reject, HeadMove::Stay, one())],
        _ => vec![(Node::Settled, HeadMove::Stay, one())],
    }
}

fn erase<P>(o: Out<P>) -> Out<()> {
    match o {
        Out::Go(_, mv) => Out::Go((), mv),
        Out::Fail => Out::Fail,
        Out::Pass => Out::Pass,
    }
}

/// Honest two-track certificate for `0^(64^k)`.
pub fn honest_cert_upower6(k: u32) -> Result<TwoTrackCertificate> {
    if k == 0 || k > 3 {
        return Err(Error::OutOfRange(format!("k = {k} must be in 1..=3")));
    }
    let n = 1u64 << (6 * k);
    Ok(TwoTrackCertificate { track1: honest_cert_upower(n)?, track2: honest_cert_usquare(n)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::run_verifier_exact;

    #[test]
    fn honest_certificate_shape() {
        let c = honest_cert_upower6(1).unwrap();
        assert_eq!(c.track1.prefix.len(), 64);
        assert_eq!(c.track2.prefix.len(), 57);
    }

    #[test]
    fn member_matches_guess_formula() {
        let bits = MembershipBits::parse("1").unwrap();
        let v = build_upower6i(&bits, 1).unwrap();
        assert!(v.validate().is_valid());
        let r = run_verifier_exact(&v, &"0".repeat(64), &honest_cert_upower6(1).unwrap()).unwrap();
        let acc = r.acceptance_probability().unwrap();
        assert!(acc > rat(3, 4), "{acc}");
    }
}
