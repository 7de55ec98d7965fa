//! Counter automata for DIMA3 and its subsets.
//!
//! Words have the shape
//! `0^(t_1) 1 0^(t_2) 1 ... 1 0^(t_(m-1)) 1 1 0^(t_m) 1 1^(u_0) 0^(u_1) 1 ... 0^(u_n) 1`
//! with `t_1 = 1`, `6 | m` and all blocks non-empty; anything else is
//! rejected outright. Members additionally satisfy `2 t_i = t_(i+1)`,
//! `2 t_m = u_0`, `u_j = u_(j+1)`, `1 + sum t_i = n + sum u_j` and
//! `u_1 + 1 = n`. Four equally likely paths split these checks so that each
//! consecutive comparison uses the counter once:
//!
//! 1. `2 t_(2i-1) = t_(2i)` and `u_(2j-1) = u_(2j)`,
//! 2. `2 t_(2i) = t_(2i+1)`, `2 t_m = u_0` and `u_(2j) = u_(2j+1)`,
//! 3. `1 + sum t_i = n + sum u_j`,
//! 4. `u_1 + 1 = n`.
//!
//! A doubling `2 a = b` is checked by counting up on `a` and down on every
//! other zero of `b`, then requiring a zero counter and an even `b`.

use num_traits::One;

use crate::alphabet::{Alphabet, LEFT, RIGHT};
use crate::error::{Error, Result};
use crate::explore::explore;
use crate::rational::{rat, Rational};

use super::machine::{CounterOp, PostPca};

/// Index class of a `u` block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum UIdx {
    First,
    Odd,
    Even,
}

impl UIdx {
    fn next(self) -> UIdx {
        match self {
            UIdx::First | UIdx::Odd => UIdx::Even,
            UIdx::Even => UIdx::Odd,
        }
    }
}

/// Deterministic parse of the shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Region {
    /// Expecting the single zero of `t_1`.
    Lead,
    LeadDone,
    /// After the separator following block `i` (mod 6).
    TSep(u8),
    /// Inside block `i` (mod 6), `1 < i < m`.
    TBlock(u8),
    LastSep,
    LastBlock,
    OnesStart,
    Ones,
    UBlock(UIdx),
    USep(UIdx),
}

/// What a symbol means, given the region it is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    TZero { odd: bool, first: bool },
    TEnd { odd: bool, first: bool, last: bool },
    DoubleOne,
    One0,
    UZero { idx: UIdx, starts: bool },
    UEnd(UIdx),
}

fn parse(r: Region, zero: bool) -> Option<(Region, Tok)> {
    use Region::*;
    let odd = |i: u8| i % 2 == 1;
    Some(match (r, zero) {
        (Lead, true) => (LeadDone, Tok::TZero { odd: true, first: true }),
        (LeadDone, false) => (TSep(1), Tok::TEnd { odd: true, first: true, last: false }),
        (TSep(i), true) => {
            let j = (i + 1) % 6;
            (TBlock(j), Tok::TZero { odd: odd(j), first: false })
        }
        (TSep(5), false) => (LastSep, Tok::DoubleOne),
        (TBlock(i), true) => (TBlock(i), Tok::TZero { odd: odd(i), first: false }),
        (TBlock(i), false) => (TSep(i), Tok::TEnd { odd: odd(i), first: false, last: false }),
        (LastSep, true) | (LastBlock, true) => (LastBlock, Tok::TZero { odd: false, first: false }),
        (LastBlock, false) => (OnesStart, Tok::TEnd { odd: false, first: false, last: true }),
        (OnesStart, false) | (Ones, false) => (Ones, Tok::One0),
        (Ones, true) => (UBlock(UIdx::First), Tok::UZero { idx: UIdx::First, starts: true }),
        (UBlock(k), true) => (UBlock(k), Tok::UZero { idx: k, starts: false }),
        (UBlock(k), false) => (USep(k), Tok::UEnd(k)),
        (USep(k), true) => (UBlock(k.next()), Tok::UZero { idx: k.next(), starts: true }),
        _ => return None,
    })
}

/// Coin-reading path of the subset recognizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Coin {
    /// Counting `1 + sum t_i` into the counter.
    Load,
    /// About to toss (or decide, once the counter is zero); `j` counts the
    /// `u`-block ends consumed so far, mod 8.
    Toss(u8),
    /// Consuming the second symbol of a heads toss.
    Skip(u8),
    Decided(bool),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Track {
    /// `half` marks an odd number of zeros seen in a halving block.
    P1 { half: bool },
    P2 { half: bool },
    P3,
    P4,
    Fail,
    Coin(Coin),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Init,
    Accept,
    Reject,
    Live(Region, Track),
    Dead,
    Settled,
}

/// What the machine does once a path's checks are complete.
struct Params {
    /// Initial split: weights of the four checking paths and of the coin path.
    paths: Rational,
    coin: Option<(Rational, Rational)>,
    /// Mass a successful checking path sends to the accepting state.
    success: Rational,
}

pub fn build_dima3(x: &Rational) -> Result<PostPca> {
    if *x <= rat(0, 1) || *x >= rat(1, 3) {
        return Err(Error::bad(format!("x must lie in (0, 1/3), got {x}")));
    }
    build(Params { paths: rat(1, 4), coin: None, success: x / rat(3, 1) })
}

/// The subset recognizer with heads probability `p` and decision weight `y`.
pub fn build_dima3_coin(y: &Rational, p: &Rational) -> Result<PostPca> {
    if *y <= rat(0, 1) || *y >= rat(1, 19) {
        return Err(Error::bad(format!("y must lie in (0, 1/19), got {y}")));
    }
    if *p < rat(0, 1) || *p > rat(1, 1) {
        return Err(Error::bad("coin bias must be a probability"));
    }
    build(Params { paths: rat(1, 8), coin: Some((p.clone(), y.clone())), success: y / rat(4, 1) })
}

fn build(pr: Params) -> Result<PostPca> {
    let t = explore(&[Node::Init, Node::Accept, Node::Reject], 4 * 2, |n, key| step(&pr, *n, key / 2, key % 2 == 0));
    Ok(PostPca::from_table(Alphabet::binary(), t))
}

type Edges = Vec<(Node, CounterOp, Rational)>;

fn step(pr: &Params, n: Node, sym: usize, z: bool) -> Edges {
    let one = Rational::one;
    let keep = |n: Node| vec![(n, CounterOp::Keep, Rational::one())];
    match n {
        Node::Accept | Node::Reject | Node::Settled => keep(n),
        Node::Dead if sym == RIGHT => keep(Node::Reject),
        Node::Dead => keep(Node::Dead),
        Node::Init if sym == LEFT => {
            let live = |t: Track| Node::Live(Region::Lead, t);
            let mut v = vec![
                (live(Track::P1 { half: false }), CounterOp::Keep, pr.paths.clone()),
                (live(Track::P2 { half: false }), CounterOp::Keep, pr.paths.clone()),
                (live(Track::P3), CounterOp::Inc, pr.paths.clone()),
                (live(Track::P4), CounterOp::Keep, pr.paths.clone()),
            ];
            if pr.coin.is_some() {
                v.push((live(Track::Coin(Coin::Load)), CounterOp::Inc, rat(1, 2)));
            }
            v
        }
        Node::Init => keep(Node::Reject),
        Node::Live(..) if sym == LEFT => keep(n),
        Node::Live(r, t) if sym == RIGHT => {
            if !matches!(r, Region::USep(_)) {
                return keep(Node::Reject);
            }
            let decide = |target: Node, p: &Rational| vec![(target, CounterOp::Keep, p.clone()), (Node::Settled, CounterOp::Keep, one() - p)];
            match t {
                Track::Fail => keep(Node::Reject),
                Track::P3 | Track::P4 if !z => keep(Node::Reject),
                Track::P1 { .. } | Track::P2 { .. } | Track::P3 | Track::P4 => decide(Node::Accept, &pr.success),
                Track::Coin(c) => {
                    let y = &pr.coin.as_ref().expect("coin path").1;
                    match c {
                        Coin::Decided(g) => decide(if g { Node::Accept } else { Node::Reject }, y),
                        Coin::Toss(j) if z => decide(if j >= 4 { Node::Accept } else { Node::Reject }, y),
                        _ => keep(Node::Reject),
                    }
                }
            }
        }
        Node::Live(r, t) => match parse(r, sym == 2) {
            None => keep(Node::Dead),
            Some((r2, tok)) => track_step(pr, t, tok, z)
                .into_iter()
                .map(|(t2, op, p)| (Node::Live(r2, t2), op, p))
                .collect(),
        },
    }
}

fn track_step(pr: &Params, t: Track, tok: Tok, z: bool) -> Vec<(Track, CounterOp, Rational)> {
    use CounterOp::*;
    let det = |t: Track, op: CounterOp| vec![(t, op, Rational::one())];
    let check = |ok: bool, t: Track| if ok { det(t, Keep) } else { det(Track::Fail, Keep) };
    // count down on odd-numbered zeros (or ones) of a block being halved
    let halve = |half: bool, mk: fn(bool) -> Track| if half { det(mk(false), Keep) } else { det(mk(true), Dec) };
    match t {
        Track::Fail => det(t, Keep),
        Track::P1 { half } => {
            let mk = |h| Track::P1 { half: h };
            match tok {
                Tok::TZero { odd: true, .. } => det(t, Inc),
                Tok::TZero { odd: false, .. } => halve(half, mk),
                Tok::TEnd { odd: false, .. } => check(z && !half, t),
                Tok::UZero { idx: UIdx::Even, .. } => det(t, Dec),
                Tok::UZero { .. } => det(t, Inc),
                Tok::UEnd(UIdx::Even) => check(z, t),
                _ => det(t, Keep),
            }
        }
        Track::P2 { half } => {
            let mk = |h| Track::P2 { half: h };
            match tok {
                Tok::TZero { first: true, .. } => det(t, Keep),
                Tok::TZero { odd: false, .. } => det(t, Inc),
                Tok::TZero { odd: true, .. } | Tok::One0 => halve(half, mk),
                Tok::TEnd { odd: true, first: false, .. } => check(z && !half, t),
                Tok::UZero { idx: UIdx::First, starts: true } => check(z && !half, t),
                Tok::UZero { idx: UIdx::First, .. } => det(t, Keep),
                Tok::UZero { idx: UIdx::Even, .. } => det(t, Inc),
                Tok::UZero { idx: UIdx::Odd, .. } => det(t, Dec),
                Tok::UEnd(UIdx::Odd) => check(z, t),
                _ => det(t, Keep),
            }
        }
        Track::P3 => match tok {
            Tok::TZero { .. } => det(t, Inc),
            Tok::UZero { .. } | Tok::UEnd(_) => det(t, Dec),
            _ => det(t, Keep),
        },
        Track::P4 => match tok {
            Tok::UZero { idx: UIdx::First, .. } => det(t, Inc),
            Tok::UEnd(UIdx::First) => det(t, Keep),
            Tok::UEnd(_) => det(t, Dec),
            _ => det(t, Keep),
        },
        Track::Coin(c) => coin_step(pr, c, tok, z),
    }
}

fn coin_step(pr: &Params, c: Coin, tok: Tok, z: bool) -> Vec<(Track, CounterOp, Rational)> {
    let p = &pr.coin.as_ref().expect("coin path").0;
    let det = |c: Coin, op: CounterOp| vec![(Track::Coin(c), op, Rational::one())];
    let bump = |j: u8| if matches!(tok, Tok::UEnd(_)) { (j + 1) % 8 } else { j };
    match c {
        Coin::Load => match tok {
            Tok::TZero { .. } => det(c, CounterOp::Inc),
            Tok::TEnd { last: true, .. } => det(Coin::Toss(0), CounterOp::Keep),
            _ => det(c, CounterOp::Keep),
        },
        Coin::Toss(j) if z => det(Coin::Decided(j >= 4), CounterOp::Keep),
        Coin::Toss(j) => vec![
            (Track::Coin(Coin::Skip(bump(j))), CounterOp::Dec, p.clone()),
            (Track::Coin(Coin::Toss(bump(j))), CounterOp::Dec, Rational::one() - p),
        ],
        Coin::Skip(j) => det(Coin::Toss(bump(j)), CounterOp::Keep),
        Coin::Decided(_) => det(c, CounterOp::Keep),
    }
}

/// The `k`-th shortest member of DIMA3.
pub fn dima3_member(k: u32) -> Result<String> {
    if k == 0 || k > 3 {
        return Err(Error::OutOfRange(format!("k = {k} must be in 1..=3")));
    }
    let m = 6 * k as usize;
    let mut s = String::new();
    for i in 1..=m {
        s.push_str(&"0".repeat(1 << (i - 1)));
        s.push('1');
        if i == m - 1 {
            s.push('1');
        }
    }
    s.push_str(&"1".repeat(1 << m));
    let u = 1usize << (3 * k);
    for _ in 0..u {
        s.push_str(&"0".repeat(u - 1));
        s.push('1');
    }
    Ok(s)
}
