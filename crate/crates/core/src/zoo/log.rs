//! `LOG = { 0 1 0^2 1 0^4 ... 1 0^(2^t) : t >= 1 }`.
//!
//! After the fixed lead-in `0 1 0^2` the blocks `m_1 = 2, m_2, ..., m_t`
//! must satisfy `m_(i+1) = 2 m_i`. Each consecutive pair is compared with the
//! pair gadget of the block families: the accepting event collects
//! `x^(4 m_i + 2 m_(i+1))` and the rejecting event picks one side of each pair.
//!
//! The last block gets no `x^4` factor on the accepting side, but a realtime
//! machine cannot know a block is last until `$`. At the start of every block
//! both events guess whether it is the last one, with probability one half;
//! a wrong guess is discarded. This scales both masses by the same `2^-t`,
//! leaving the postselected ratio unchanged.

use num_traits::One;

use crate::alphabet::{Alphabet, LEFT, RIGHT};
use crate::error::Result;
use crate::explore::explore;
use crate::rational::{pow, rat, Rational};
use crate::PostPfa;

use super::check_x;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Shape {
    /// Expecting the leading `0`.
    Lead,
    LeadSep,
    /// Inside the fixed block `m_1 = 2`, having read this many zeros.
    First(u8),
    /// Just read a block-ending `1`.
    Sep,
    /// Inside block `i >= 2`.
    Block,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Choice {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Event {
    APending,
    RPending,
    A { last: bool },
    /// `prev` is the side chosen for the pair ending at this block, `cur` the
    /// one for the pair starting here (`None` when guessed last).
    R { prev: Option<Choice>, cur: Option<Choice> },
    Quit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Init,
    Accept,
    Reject,
    Live(Shape, Event),
    Dead,
    Settled,
}

pub fn build_log(x: &Rational) -> Result<PostPfa> {
    check_x(x)?;
    let x = x.clone();
    let t = explore(&[Node::Init, Node::Accept, Node::Reject], 4, |n, sym| step(&x, *n, sym));
    Ok(PostPfa::from_table(Alphabet::binary(), t))
}

type Edges = Vec<(Node, (), Rational)>;

fn step(x: &Rational, n: Node, sym: usize) -> Edges {
    let one = Rational::one;
    match n {
        Node::Accept | Node::Reject | Node::Settled => vec![(n, (), one())],
        Node::Init if sym == LEFT => vec![
            (Node::Live(Shape::Lead, Event::APending), (), rat(1, 2)),
            (Node::Live(Shape::Lead, Event::RPending), (), rat(1, 2)),
        ],
        Node::Init => vec![(Node::Dead, (), one())],
        Node::Dead if sym == RIGHT => vec![(Node::Reject, (), one())],
        Node::Dead => vec![(Node::Dead, (), one())],
        Node::Live(..) if sym == LEFT => vec![(n, (), one())],
        Node::Live(shape, ev) if sym == RIGHT => finish(x, shape, ev),
        Node::Live(shape, ev) => letter(x, shape, ev, sym == 2),
    }
}

fn finish(x: &Rational, shape: Shape, ev: Event) -> Edges {
    if !matches!(shape, Shape::First(2) | Shape::Block) {
        return vec![(Node::Reject, (), Rational::one())];
    }
    match ev {
        Event::A { last: true } => vec![(Node::Accept, (), Rational::one())],
        Event::R { cur: None, .. } => vec![
            (Node::Reject, (), x.clone()),
            (Node::Settled, (), Rational::one() - x),
        ],
        _ => vec![(Node::Settled, (), Rational::one())],
    }
}

fn letter(x: &Rational, shape: Shape, ev: Event, zero: bool) -> Edges {
    let next = match (shape, zero) {
        (Shape::Lead, true) => Shape::LeadSep,
        (Shape::LeadSep, false) => Shape::First(0),
        (Shape::First(k), true) if k < 2 => Shape::First(k + 1),
        (Shape::First(2), false) | (Shape::Block, false) => Shape::Sep,
        (Shape::Sep, true) | (Shape::Block, true) => Shape::Block,
        _ => return vec![(Node::Dead, (), Rational::one())],
    };
    let live = |e: Event| Node::Live(next, e);
    if !zero {
        // a `1` starts a new block: resolve the guesses for it
        let one = Rational::one;
        return match ev {
            Event::Quit | Event::A { last: true } | Event::R { cur: None, .. } => {
                vec![(live(Event::Quit), (), one())]
            }
            Event::APending | Event::A { last: false } => vec![
                (live(Event::A { last: true }), (), rat(1, 2)),
                (live(Event::A { last: false }), (), rat(1, 2)),
            ],
            Event::RPending | Event::R { .. } => {
                let prev = match ev {
                    Event::R { cur, .. } => cur,
                    _ => None,
                };
                vec![
                    (live(Event::R { prev, cur: None }), (), rat(1, 2)),
                    (live(Event::R { prev, cur: Some(Choice::First) }), (), rat(1, 4)),
                    (live(Event::R { prev, cur: Some(Choice::Second) }), (), rat(1, 4)),
                ]
            }
        };
    }
    let in_first = matches!(shape, Shape::First(_));
    let c = match ev {
        Event::A { last } => (if in_first { 0 } else { 2 }) + (if last { 0 } else { 4 }),
        Event::R { prev, cur } => {
            (if prev == Some(Choice::Second) { 4 } else { 0 }) + (if cur == Some(Choice::First) { 8 } else { 0 })
        }
        _ => 0,
    };
    if c == 0 {
        return vec![(live(ev), (), Rational::one())];
    }
    let keep = pow(x, c);
    vec![(live(Event::Quit), (), Rational::one() - &keep), (live(ev), (), keep)]
}

/// Interleaves `w` into a LOG-shaped word: bit `i` follows the `i`-th block
/// separator, and the block after it has `2^i` zeros.
pub fn pad_log(w: &str) -> String {
    let mut out = String::from("0");
    for (i, c) in w.chars().enumerate() {
        out.push('1');
        out.push(c);
        out.push_str(&"0".repeat(1 << (i + 1)));
    }
    out
}

/// Inverse of [`pad_log`]; `None` if `s` is not of that form.
pub fn strip_log_payload(s: &str) -> Option<String> {
    let b = s.as_bytes();
    if b.first() != Some(&b'0') {
        return None;
    }
    let mut pos = 1;
    let mut out = String::new();
    let mut i = 1;
    while pos < b.len() {
        if b[pos] != b'1' || pos + 1 >= b.len() {
            return None;
        }
        let c = b[pos + 1];
        if c != b'0' && c != b'1' {
            return None;
        }
        out.push(c as char);
        let zeros = 1usize.checked_shl(i)?;
        let end = pos + 2 + zeros;
        if end > b.len() || b[pos + 2..end].iter().any(|&z| z != b'0') {
            return None;
        }
        pos = end;
        i += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::run_exact;

    #[test]
    fn pad_examples() {
        assert_eq!(pad_log("1"), "01100");
        assert_eq!(pad_log("11"), "01100110000");
        assert_eq!(pad_log("0"), "01000");
        assert_eq!(pad_log(""), "0");
        assert_eq!(strip_log_payload("01100110000").as_deref(), Some("11"));
        assert_eq!(strip_log_payload("0110"), None);
    }

    #[test]
    fn log_members() {
        let p = build_log(&rat(1, 4)).unwrap();
        assert!(p.validate().is_valid());
        for w in ["0100", "010010000", "010010000100000000"] {
            let r = run_exact(&p, w).unwrap();
            assert_eq!(r.acceptance_probability(), Some(rat(4, 5)), "{w}");
        }
        for w in ["01000", "0100100", "01001000", "0100100001000"] {
            let r = run_exact(&p, w).unwrap();
            assert!(r.rejects_with_at_least(&rat(2, 3)), "{w}");
        }
    }
}
