//! Verifiers for `{ 0^(2^m) }` and `{ 0^(2^(k m)) }`.
//!
//! The honest certificate for `n = 2^m` is `0^(n/2 - 1) 1 0^(n/4 - 1) 1 ... 0 1 1 $`:
//! blocks of length `n/2, n/4, ..., 2` followed by a lone `1`. The main path
//! reads it in lockstep with the input and checks that `$` falls on the last
//! input symbol. At the first symbol of each zero-block it spawns, with
//! probability one half, a subpath that reads that block at half speed and
//! must finish exactly at the end-marker, which forces the block to cover
//! half of the remaining input. An accepting path halves at every block, so
//! rejected certificates always outweigh the accepting mass.

use num_traits::One;

use crate::alphabet::{Alphabet, LEFT, RIGHT};
use crate::error::{Error, Result};
use crate::explore::explore;
use crate::rational::{rat, Rational};

use super::certificate::Certificate;
use super::machine::{HeadMove, VerifierPfa};
use super::check_verifier_x;

/// Certificate symbols `0`, `1`, `$` by index.
pub(crate) const ZERO: usize = 0;
pub(crate) const ONE: usize = 1;
pub(crate) const END: usize = 2;

pub(crate) fn binary_cert_alphabet() -> Vec<String> {
    vec!["0".into(), "1".into(), "$".into()]
}

/// Certificate syntax `(0^* 1)^* 1 $` read one symbol at a time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Fmt {
    BlockStart,
    InZeros,
    LastOne,
    Done,
    Bad,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum BlockEvent {
    None,
    ZeroBlock,
    LastBlock,
}

pub(crate) fn fmt_step(f: Fmt, c: usize) -> (Fmt, BlockEvent) {
    match (f, c) {
        (Fmt::BlockStart, ZERO) => (Fmt::InZeros, BlockEvent::ZeroBlock),
        (Fmt::BlockStart, ONE) => (Fmt::LastOne, BlockEvent::LastBlock),
        (Fmt::InZeros, ZERO) => (Fmt::InZeros, BlockEvent::None),
        (Fmt::InZeros, ONE) => (Fmt::BlockStart, BlockEvent::None),
        (Fmt::LastOne, END) => (Fmt::Done, BlockEvent::None),
        (Fmt::Done, _) => (Fmt::Done, BlockEvent::None),
        _ => (Fmt::Bad, BlockEvent::None),
    }
}

/// Half-speed reader of one zero-block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Half {
    /// Next step re-reads the current cell.
    Second,
    /// Next step reads a fresh cell.
    First,
    /// The block has been read twice over.
    End,
}

/// Main/sub part shared with the combined verifier, over projected symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Part {
    Main(Fmt, u32),
    Sub(Half),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Out<N> {
    Go(N, HeadMove),
    Fail,
    /// Finished successfully without a postselection decision.
    Pass,
}

/// Input-letter step for the main path or a subpath; `k` is the modulus of
/// the block count.
pub(crate) fn part_letter(p: Part, c: usize, k: u32) -> Vec<(Out<Part>, Rational)> {
    let go = |p: Part, mv: HeadMove| Out::Go(p, mv);
    match p {
        Part::Main(Fmt::Done, _) => vec![(Out::Fail, Rational::one())],
        Part::Main(f, bm) => {
            let (f2, ev) = fmt_step(f, c);
            let mv = if f2 == Fmt::Done { HeadMove::Stay } else { HeadMove::Advance };
            match (f2, ev) {
                (Fmt::Bad, _) => vec![(Out::Fail, Rational::one())],
                (_, BlockEvent::ZeroBlock) => vec![
                    (go(Part::Main(f2, (bm + 1) % k), mv), rat(1, 2)),
                    (go(Part::Sub(Half::Second), HeadMove::Stay), rat(1, 2)),
                ],
                (_, BlockEvent::LastBlock) => vec![(go(Part::Main(f2, (bm + 1) % k), mv), Rational::one())],
                _ => vec![(go(Part::Main(f2, bm), mv), Rational::one())],
            }
        }
        Part::Sub(h) => {
            let out = match (h, c) {
                (_, END) | (Half::End, _) => Out::Fail,
                (Half::Second, ONE) => go(Part::Sub(Half::End), HeadMove::Advance),
                (Half::Second, _) => go(Part::Sub(Half::First), HeadMove::Advance),
                (Half::First, _) => go(Part::Sub(Half::Second), HeadMove::Stay),
            };
            vec![(out, Rational::one())]
        }
    }
}

pub(crate) fn part_end(p: Part) -> Out<Part> {
    match p {
        Part::Main(Fmt::Done, 0) | Part::Sub(Half::End) => Out::Pass,
        _ => Out::Fail,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Init,
    Accept,
    Reject,
    Acc(Fmt),
    P(Part),
    Fail,
    /// Left the protocol without a decision; still rejected on short inputs.
    Sink,
    Settled,
}

/// Input length, saturating at two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct St(u8, Node);

pub fn build_upower(x: &Rational) -> Result<VerifierPfa> {
    build(x, 1)
}

/// Accepts `0^(2^(k m))` by also counting certificate blocks modulo `k`.
pub fn build_upower_k(x: &Rational, k: u32) -> Result<VerifierPfa> {
    if k == 0 {
        return Err(Error::bad("k must be positive"));
    }
    build(x, k)
}

fn build(x: &Rational, k: u32) -> Result<VerifierPfa> {
    check_verifier_x(x)?;
    let roots = [St(0, Node::Init), St(0, Node::Accept), St(0, Node::Reject)];
    let t = explore(&roots, 3 * 3, |s, key| step(x, k, *s, key / 3, key % 3));
    Ok(VerifierPfa::from_table(Alphabet::unary(), binary_cert_alphabet(), t))
}

type Edges = Vec<(St, HeadMove, Rational)>;

fn step(x: &Rational, k: u32, St(len, n): St, sym: usize, c: usize) -> Edges {
    let one = Rational::one;
    let stay = |n: Node, p: Rational| (St(len, n), HeadMove::Stay, p);
    let done = |n: Node| vec![(St(0, n), HeadMove::Stay, Rational::one())];
    match (n, sym) {
        (Node::Accept | Node::Reject | Node::Settled, _) => done(n),
        (Node::Init, LEFT) => vec![
            stay(Node::Acc(Fmt::BlockStart), rat(1, 2)),
            stay(Node::P(Part::Main(Fmt::BlockStart, 0)), rat(1, 2)),
        ],
        (Node::Init, _) => done(Node::Reject),
        (_, LEFT) => vec![stay(n, one())],
        (_, RIGHT) if len < 2 => done(Node::Reject),
        (Node::Fail, RIGHT) => done(Node::Reject),
        (Node::Sink, RIGHT) => done(Node::Settled),
        (Node::Fail | Node::Sink, _) => vec![(St((len + 1).min(2), n), HeadMove::Stay, one())],
        (Node::Acc(f), RIGHT) => {
            if f == Fmt::Done {
                vec![(St(0, Node::Accept), HeadMove::Stay, x.clone()), (St(0, Node::Settled), HeadMove::Stay, one() - x)]
            } else {
                done(Node::Settled)
            }
        }
        (Node::P(p), RIGHT) => match part_end(p) {
            Out::Pass => done(Node::Settled),
            _ => done(Node::Reject),
        },
        (node, _) => {
            let len = (len + 1).min(2);
            match node {
                Node::Acc(Fmt::Done) => vec![(St(len, n), HeadMove::Stay, one())],
                Node::Acc(f) => {
                    let (f2, ev) = fmt_step(f, c);
                    let mv = if f2 == Fmt::Done { HeadMove::Stay } else { HeadMove::Advance };
                    match (f2, ev) {
                        (Fmt::Bad, _) => vec![(St(len, Node::Fail), HeadMove::Stay, one())],
                        (_, BlockEvent::None) => vec![(St(len, Node::Acc(f2)), mv, one())],
                        _ => vec![
                            (St(len, Node::Acc(f2)), mv, rat(1, 2)),
                            (St(len, Node::Sink), HeadMove::Stay, rat(1, 2)),
                        ],
                    }
                }
                Node::P(p) => part_letter(p, c, k)
                    .into_iter()
                    .map(|(o, pr)| match o {
                        Out::Go(p2, mv) => (St(len, Node::P(p2)), mv, pr),
                        Out::Fail => (St(len, Node::Fail), HeadMove::Stay, pr),
                        Out::Pass => (St(len, Node::Sink), HeadMove::Stay, pr),
                    })
                    .collect(),
                _ => unreachable!(),
            }
        }
    }
}

/// Honest certificate for `0^n`; `NotAMember` unless `n = 2^m` with `m >= 1`.
pub fn honest_cert_upower(n: u64) -> Result<Certificate> {
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::NotAMember(format!("{n} is not a power of two at least 2")));
    }
    let mut s = String::new();
    let mut l = n / 2;
    while l >= 2 {
        s.push_str(&"0".repeat(l as usize - 1));
        s.push('1');
        l /= 2;
    }
    s.push_str("1$");
    Ok(Certificate::dollar(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::run_verifier_exact;

    #[test]
    fn honest_certificates() {
        assert_eq!(honest_cert_upower(2).unwrap().prefix, "1$");
        assert_eq!(honest_cert_upower(4).unwrap().prefix, "011$");
        assert_eq!(honest_cert_upower(8).unwrap().prefix, "0001011$");
        assert!(matches!(honest_cert_upower(6), Err(Error::NotAMember(_))));
        assert!(honest_cert_upower(1).is_err());
    }

    #[test]
    fn completeness_small() {
        let v = build_upower(&rat(1, 4)).unwrap();
        assert!(v.validate().is_valid());
        for m in 1..=5 {
            let n = 1u64 << m;
            let r = run_verifier_exact(&v, &"0".repeat(n as usize), &honest_cert_upower(n).unwrap()).unwrap();
            assert_eq!(r.acceptance_probability(), Some(rat(1, 1)), "n = {n}");
            assert_eq!(r.accept_mass, rat(1, 4) / rat(1 << (m + 1), 1));
        }
    }

    #[test]
    fn short_inputs_rejected() {
        let v = build_upower(&rat(1, 4)).unwrap();
        for w in ["", "0"] {
            for c in ["", "$", "1$", "0"] {
                let r = run_verifier_exact(&v, w, &Certificate::dollar(c)).unwrap();
                assert_eq!(r.reject_mass, rat(1, 1));
            }
        }
    }

    #[test]
    fn modulus_check() {
        let x = rat(1, 2);
        let v = build_upower_k(&x, 2).unwrap();
        let r = run_verifier_exact(&v, &"0".repeat(8), &honest_cert_upower(8).unwrap()).unwrap();
        assert_eq!(r.rejection_probability(), Some(rat(4, 5)));
        let r = run_verifier_exact(&v, &"0".repeat(16), &honest_cert_upower(16).unwrap()).unwrap();
        assert_eq!(r.acceptance_probability(), Some(rat(1, 1)));
    }
}
