//! Verifier for `{ 0^(m^2) }`.
//!
//! The honest certificate for `n = m^2` is `m - 1` blocks of `m` equal
//! letters, alternating `a` and `b`, then `$`. The main path pauses once at
//! the first cell of every block, so reaching `$` on the last input symbol
//! means `n = S + t + 1` for total block length `S` and block count `t`. The
//! accepting path reads in lockstep and, at each block's first cell, spawns
//! with probability one half a subpath that reads that block at half speed
//! and the rest at full speed; it must meet `$` at the end-marker, forcing
//! `n = S + m_j`. Together these force all blocks to have length `t + 1`.
//!
//! Subpaths come off the accepting path rather than the main path because
//! the main path's pauses would shift every later subpath's start.

use num_traits::One;

use crate::alphabet::{Alphabet, LEFT, RIGHT};
use crate::error::{Error, Result};
use crate::explore::explore;
use crate::rational::{rat, Rational};

use super::certificate::Certificate;
use super::check_verifier_x;
use super::machine::{HeadMove, VerifierPfa};
use super::upower::Out;

pub(crate) const A: usize = 0;
pub(crate) const END: usize = 2;

pub(crate) fn letter_cert_alphabet() -> Vec<String> {
    vec!["a".into(), "b".into(), "$".into()]
}

/// Syntax `a^+ b^+ a^+ ... $`, tracking the current letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Fmt2 {
    Start,
    In(usize),
    Done,
    Bad,
}

/// Returns the new state and whether `c` starts a block.
pub(crate) fn fmt2_step(f: Fmt2, c: usize) -> (Fmt2, bool) {
    match (f, c) {
        (Fmt2::Start, A) => (Fmt2::In(A), true),
        (Fmt2::In(_), END) => (Fmt2::Done, false),
        (Fmt2::In(l), c) if c == l => (f, false),
        (Fmt2::In(_), c) => (Fmt2::In(c), true),
        (Fmt2::Done, _) => (Fmt2::Done, false),
        _ => (Fmt2::Bad, false),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Phase {
    /// Re-read the current cell next.
    Second,
    /// Read a fresh cell of the block next.
    First,
    /// Past the block, reading at full speed.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum SqPart {
    Main(Fmt2),
    Spawn(Fmt2),
    Sub(usize, Phase),
}

pub(crate) fn sq_letter(p: SqPart, c: usize) -> Vec<(Out<SqPart>, Rational)> {
    let one = Rational::one;
    let go = |p: SqPart, mv: HeadMove| vec![(Out::Go(p, mv), one())];
    match p {
        SqPart::Main(Fmt2::Done) => vec![(Out::Fail, one())],
        SqPart::Main(f) => match fmt2_step(f, c) {
            (Fmt2::Bad, _) => vec![(Out::Fail, one())],
            (f2 @ Fmt2::Done, _) | (f2, true) => go(SqPart::Main(f2), HeadMove::Stay),
            (f2, false) => go(SqPart::Main(f2), HeadMove::Advance),
        },
        SqPart::Spawn(Fmt2::Done) => go(p, HeadMove::Stay),
        SqPart::Spawn(f) => match fmt2_step(f, c) {
            (Fmt2::Bad, _) => vec![(Out::Fail, one())],
            (f2 @ Fmt2::Done, _) => go(SqPart::Spawn(f2), HeadMove::Stay),
            (f2, true) => vec![
                (Out::Go(SqPart::Spawn(f2), HeadMove::Advance), rat(1, 2)),
                (Out::Go(SqPart::Sub(c, Phase::Second), HeadMove::Stay), rat(1, 2)),
            ],
            (f2, false) => go(SqPart::Spawn(f2), HeadMove::Advance),
        },
        SqPart::Sub(l, ph) => match (ph, c) {
            (_, END) => vec![(Out::Fail, one())],
            (Phase::Second, _) => go(SqPart::Sub(l, Phase::First), HeadMove::Advance),
            (Phase::First, c) if c == l => go(SqPart::Sub(l, Phase::Second), HeadMove::Stay),
            _ => go(SqPart::Sub(l, Phase::Full), HeadMove::Advance),
        },
    }
}

/// End-marker outcome; the spawning path's own decision is left to the caller.
pub(crate) fn sq_end(p: SqPart, c: usize) -> Out<SqPart> {
    match p {
        SqPart::Main(Fmt2::Done) | SqPart::Spawn(_) => Out::Pass,
        SqPart::Sub(_, Phase::First | Phase::Full) if c == END => Out::Pass,
        _ => Out::Fail,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Init,
    Accept,
    Reject,
    P(SqPart),
    Fail,
    Sink,
    Settled,
}

/// Input length, saturating at four: `n <= 3` is decided outright.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct St(u8, Node);

pub fn build_usquare(x: &Rational) -> Result<VerifierPfa> {
    check_verifier_x(x)?;
    let roots = [St(0, Node::Init), St(0, Node::Accept), St(0, Node::Reject)];
    let t = explore(&roots, 3 * 3, |s, key| step(x, *s, key / 3, key % 3));
    Ok(VerifierPfa::from_table(Alphabet::unary(), letter_cert_alphabet(), t))
}

fn step(x: &Rational, St(len, n): St, sym: usize, c: usize) -> Vec<(St, HeadMove, Rational)> {
    let one = Rational::one;
    let done = |n: Node| vec![(St(0, n), HeadMove::Stay, Rational::one())];
    match (n, sym) {
        (Node::Accept | Node::Reject | Node::Settled, _) => done(n),
        (Node::Init, LEFT) => vec![
            (St(0, Node::P(SqPart::Spawn(Fmt2::Start))), HeadMove::Stay, rat(1, 2)),
            (St(0, Node::P(SqPart::Main(Fmt2::Start))), HeadMove::Stay, rat(1, 2)),
        ],
        (Node::Init, _) => done(Node::Reject),
        (_, LEFT) => vec![(St(len, n), HeadMove::Stay, one())],
        (_, RIGHT) if len == 1 => done(Node::Accept),
        (_, RIGHT) if len < 4 => done(Node::Reject),
        (Node::Fail, RIGHT) => done(Node::Reject),
        (Node::Sink, RIGHT) => done(Node::Settled),
        (Node::P(SqPart::Spawn(f)), RIGHT) => {
            if f == Fmt2::Done {
                vec![(St(0, Node::Accept), HeadMove::Stay, x.clone()), (St(0, Node::Settled), HeadMove::Stay, one() - x)]
            } else {
                done(Node::Settled)
            }
        }
        (Node::P(p), RIGHT) => match sq_end(p, c) {
            Out::Fail => done(Node::Reject),
            _ => done(Node::Settled),
        },
        (Node::Fail | Node::Sink, _) => vec![(St((len + 1).min(4), n), HeadMove::Stay, one())],
        (Node::P(p), _) => {
            let len = (len + 1).min(4);
            sq_letter(p, c)
                .into_iter()
                .map(|(o, pr)| match o {
                    Out::Go(p2, mv) => (St(len, Node::P(p2)), mv, pr),
                    Out::Fail => (St(len, Node::Fail), HeadMove::Stay, pr),
                    Out::Pass => (St(len, Node::Sink), HeadMove::Stay, pr),
                })
                .collect()
        }
    }
}

/// Honest certificate for `0^n`; `NotAMember` unless `n` is a positive square.
pub fn honest_cert_usquare(n: u64) -> Result<Certificate> {
    let m = (n as f64).sqrt().round() as u64;
    if n == 0 || m * m != n {
        return Err(Error::NotAMember(format!("{n} is not a positive square")));
    }
    let mut s = String::new();
    for j in 0..m.saturating_sub(1) {
        let l = if j % 2 == 0 { 'a' } else { 'b' };
        s.extend(std::iter::repeat(l).take(m as usize));
    }
    s.push('$');
    Ok(Certificate::dollar(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::run_verifier_exact;

    #[test]
    fn honest_certificates() {
        assert_eq!(honest_cert_usquare(1).unwrap().prefix, "$");
        assert_eq!(honest_cert_usquare(4).unwrap().prefix, "aa$");
        assert_eq!(honest_cert_usquare(9).unwrap().prefix, "aaabbb$");
        assert!(matches!(honest_cert_usquare(8), Err(Error::NotAMember(_))));
    }

    #[test]
    fn completeness_small() {
        let v = build_usquare(&rat(1, 4)).unwrap();
        assert!(v.validate().is_valid());
        for m in 1..=7u64 {
            let n = m * m;
            let r = run_verifier_exact(&v, &"0".repeat(n as usize), &honest_cert_usquare(n).unwrap()).unwrap();
            assert_eq!(r.acceptance_probability(), Some(rat(1, 1)), "n = {n}");
        }
    }

    #[test]
    fn tiny_inputs_decided() {
        let v = build_usquare(&rat(1, 4)).unwrap();
        for (n, acc) in [(0, false), (1, true), (2, false), (3, false)] {
            let r = run_verifier_exact(&v, &"0".repeat(n), &Certificate::dollar("ab")).unwrap();
            assert_eq!(r.accept_mass == rat(1, 1), acc, "n = {n}");
            assert_eq!(r.reject_mass == rat(1, 1), !acc, "n = {n}");
        }
    }
}
