//! `0^m 1 0^(a m + b)` pairs, single or repeated.

use num_traits::One;

use crate::alphabet::{Alphabet, LEFT, RIGHT};
use crate::error::{Error, Result};
use crate::explore::explore;
use crate::rational::{pow, rat, Rational};
use crate::PostPfa;

use super::check_x;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Shape {
    /// Expecting the first zero of an m-block.
    Start,
    InM,
    /// Read the `1` between the blocks of a pair.
    Mid,
    InN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Choice {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Event {
    A,
    R(Choice),
    Quit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Init,
    Accept,
    Reject,
    Live(Shape, Event),
    /// Wrong shape; everything here is rejected at `$`.
    Dead,
    Settled,
}

struct Spec {
    x: Rational,
    a: u32,
    b: u32,
    repeated: bool,
}

pub fn build_equal(x: &Rational) -> Result<PostPfa> {
    build(x, 1, 0, false)
}

pub fn build_equal_blocks(x: &Rational) -> Result<PostPfa> {
    build(x, 1, 0, true)
}

/// Pairs `0^m 1 0^(a m + b)`; `(a, b) = (0, 0)` would force empty blocks.
pub fn build_equal_blocks_f(x: &Rational, a: u32, b: u32) -> Result<PostPfa> {
    if a == 0 && b == 0 {
        return Err(Error::bad("f(m) = 0 is not allowed"));
    }
    build(x, a, b, true)
}

fn build(x: &Rational, a: u32, b: u32, repeated: bool) -> Result<PostPfa> {
    check_x(x)?;
    let spec = Spec { x: x.clone(), a, b, repeated };
    let t = explore(&[Node::Init, Node::Accept, Node::Reject], 4, |n, sym| step(&spec, *n, sym));
    Ok(PostPfa::from_table(Alphabet::binary(), t))
}

fn step(sp: &Spec, n: Node, sym: usize) -> Vec<(Node, (), Rational)> {
    let one = Rational::one;
    let e = |n: Node, p: Rational| (n, (), p);
    match n {
        Node::Accept | Node::Reject | Node::Settled => vec![e(n, one())],
        Node::Init => {
            if sym == LEFT {
                vec![
                    e(Node::Live(Shape::Start, Event::A), rat(1, 2)),
                    e(Node::Live(Shape::Start, Event::R(Choice::First)), rat(1, 4)),
                    e(Node::Live(Shape::Start, Event::R(Choice::Second)), rat(1, 4)),
                ]
            } else {
                vec![e(Node::Dead, one())]
            }
        }
        Node::Dead => {
            if sym == RIGHT {
                vec![e(Node::Reject, one())]
            } else {
                vec![e(Node::Dead, one())]
            }
        }
        Node::Live(shape, ev) => match sym {
            LEFT => vec![e(n, one())],
            RIGHT => {
                if shape != Shape::InN {
                    return vec![e(Node::Reject, one())];
                }
                match ev {
                    Event::A => vec![e(Node::Accept, one())],
                    Event::R(_) => vec![e(Node::Reject, sp.x.clone()), e(Node::Settled, one() - &sp.x)],
                    Event::Quit => vec![e(Node::Settled, one())],
                }
            }
            _ => letter(sp, shape, ev, sym == 2),
        },
    }
}

fn letter(sp: &Spec, shape: Shape, ev: Event, zero: bool) -> Vec<(Node, (), Rational)> {
    let next = match (shape, zero) {
        (Shape::Start, true) | (Shape::InM, true) => Shape::InM,
        (Shape::InM, false) => Shape::Mid,
        (Shape::Mid, true) | (Shape::InN, true) => Shape::InN,
        (Shape::InN, false) if sp.repeated => Shape::Start,
        _ => return vec![(Node::Dead, (), Rational::one())],
    };
    if !zero {
        if shape == Shape::InN {
            if let Event::R(_) = ev {
                return vec![
                    (Node::Live(next, Event::R(Choice::First)), (), rat(1, 2)),
                    (Node::Live(next, Event::R(Choice::Second)), (), rat(1, 2)),
                ];
            }
        }
        return vec![(Node::Live(next, ev), (), Rational::one())];
    }
    // exponent of x applied to this zero
    let first_of_m = shape == Shape::Start;
    let in_m = matches!(shape, Shape::Start | Shape::InM);
    let c = match ev {
        Event::Quit => 0,
        Event::A if in_m => 2 * sp.a + if first_of_m { 2 * sp.b } else { 0 },
        Event::A => 2,
        Event::R(Choice::First) if in_m => 4 * sp.a + if first_of_m { 4 * sp.b } else { 0 },
        Event::R(Choice::First) => 0,
        Event::R(Choice::Second) if in_m => 0,
        Event::R(Choice::Second) => 4,
    };
    if c == 0 {
        return vec![(Node::Live(next, ev), (), Rational::one())];
    }
    let keep = pow(&sp.x, c as u64);
    vec![
        (Node::Live(next, Event::Quit), (), Rational::one() - &keep),
        (Node::Live(next, ev), (), keep),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::run_exact;

    #[test]
    fn equal_values() {
        let p = build_equal(&rat(1, 4)).unwrap();
        assert!(p.validate().is_valid());
        let r = run_exact(&p, "010").unwrap();
        assert_eq!(r.accept_mass, rat(1, 512));
        assert_eq!(r.reject_mass, rat(1, 2048));
        assert_eq!(r.acceptance_probability(), Some(rat(4, 5)));
        assert_eq!(r.expected_passes(), Some(rat(2048, 5)));
        let r = run_exact(&p, "0100").unwrap();
        assert_eq!(r.rejection_probability(), Some(rat(257, 385)));
        for w in ["", "0", "1", "01", "10", "011", "0110", "01010"] {
            let r = run_exact(&p, w).unwrap();
            assert_eq!(r.accept_mass, rat(0, 1), "{w}");
            assert_eq!(r.reject_mass, rat(1, 1), "{w}");
        }
    }

    #[test]
    fn parameter_checks() {
        assert!(build_equal(&rat(1, 2)).is_err());
        assert!(build_equal(&rat(0, 1)).is_err());
        assert!(build_equal_blocks_f(&rat(1, 4), 0, 0).is_err());
    }

    #[test]
    fn blocks_f_identity_matches_blocks() {
        let x = rat(1, 4);
        assert_eq!(build_equal_blocks_f(&x, 1, 0).unwrap(), build_equal_blocks(&x).unwrap());
    }

    #[test]
    fn blocks_members() {
        let x = rat(1, 4);
        let p = build_equal_blocks(&x).unwrap();
        for w in ["010", "010100100", "001001010"] {
            assert_eq!(run_exact(&p, w).unwrap().acceptance_probability(), Some(rat(4, 5)), "{w}");
        }
        let p = build_equal_blocks_f(&x, 2, 1).unwrap();
        assert_eq!(run_exact(&p, "010001000001").unwrap().acceptance_probability(), Some(rat(0, 1)));
        assert_eq!(run_exact(&p, "01000100010000000").unwrap().acceptance_probability(), Some(rat(4, 5)));
    }
}
