//! Closed forms for the two event probabilities of the block recognizers.

use crate::rational::{pow, rat, Rational};

use super::Family;

/// Probabilities of the accepting and rejecting events on a well-shaped word,
/// before the even split between the two and the final `x` on rejection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventProbs {
    pub accept_event: Rational,
    pub reject_event: Rational,
}

impl EventProbs {
    /// Postselected acceptance `A / (A + x R)`.
    pub fn acceptance(&self, x: &Rational) -> Rational {
        &self.accept_event / (&self.accept_event + x * &self.reject_event)
    }
}

/// `Pr[E_A] = x^(2m + 2n)` and `Pr[E_R] = (x^(4m) + x^(4n)) / 2`.
pub fn equal_event_probs(x: &Rational, m: u64, n: u64) -> EventProbs {
    pair_probs(x, 2 * m, 2 * n, 4 * m, 4 * n)
}

fn pair_probs(x: &Rational, a1: u64, a2: u64, r1: u64, r2: u64) -> EventProbs {
    EventProbs {
        accept_event: pow(x, a1 + a2),
        reject_event: (pow(x, r1) + pow(x, r2)) * rat(1, 2),
    }
}

fn times(p: EventProbs, q: EventProbs) -> EventProbs {
    EventProbs {
        accept_event: p.accept_event * q.accept_event,
        reject_event: p.reject_event * q.reject_event,
    }
}

fn zero_blocks(w: &str) -> Option<Vec<u64>> {
    if w.starts_with('1') || w.ends_with('1') || w.contains("11") || w.chars().any(|c| c != '0' && c != '1') {
        return None;
    }
    let blocks: Vec<u64> = w.split('1').map(|b| b.len() as u64).collect();
    blocks.iter().all(|&b| b > 0).then_some(blocks)
}

/// Event probabilities of `family` on `w`, or `None` when `w` fails the shape
/// check (and is then rejected with certainty).
pub fn shape_event_probs(family: Family, x: &Rational, w: &str) -> Option<EventProbs> {
    let blocks = zero_blocks(w)?;
    let unit = EventProbs { accept_event: rat(1, 1), reject_event: rat(1, 1) };
    match family {
        Family::Equal => (blocks.len() == 2).then(|| equal_event_probs(x, blocks[0], blocks[1])),
        Family::EqualBlocks | Family::EqualBlocksF { .. } => {
            let (a, b) = match family {
                Family::EqualBlocksF { a, b } => (a as u64, b as u64),
                _ => (1, 0),
            };
            if blocks.len() % 2 != 0 {
                return None;
            }
            Some(blocks.chunks(2).fold(unit, |acc, p| {
                let f = a * p[0] + b;
                times(acc, pair_probs(x, 2 * f, 2 * p[1], 4 * f, 4 * p[1]))
            }))
        }
        Family::Log => {
            if blocks.len() < 2 || blocks[0] != 1 || blocks[1] != 2 {
                return None;
            }
            let m = &blocks[1..];
            Some(m.windows(2).fold(unit, |acc, p| {
                times(acc, pair_probs(x, 4 * p[0], 2 * p[1], 8 * p[0], 4 * p[1]))
            }))
        }
    }
}

/// Acceptance predicted by the closed forms; zero on badly shaped words.
pub fn predicted_acceptance(family: Family, x: &Rational, w: &str) -> Rational {
    shape_event_probs(family, x, w).map_or_else(|| rat(0, 1), |e| e.acceptance(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_closed_form() {
        let x = rat(1, 4);
        let e = equal_event_probs(&x, 1, 1);
        assert_eq!(e.accept_event, rat(1, 256));
        assert_eq!(e.acceptance(&x), rat(4, 5));
        assert_eq!(predicted_acceptance(Family::Equal, &x, "0100"), rat(128, 385));
        assert_eq!(predicted_acceptance(Family::Equal, &x, "01"), rat(0, 1));
    }
}
