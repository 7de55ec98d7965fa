//! Membership straight from the language definitions, for use as a test
//! oracle independent of every construction in the crate.

use crate::coin::MembershipBits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Language {
    Equal,
    EqualBlocks,
    EqualBlocksF { a: u32, b: u32 },
    Log,
    /// `0^(2^m)`, `m >= 1`.
    Upower,
    /// `0^(2^(k m))`, `m >= 1`.
    UpowerK(u32),
    /// `0^(m^2)`, `m >= 1`.
    Usquare,
    /// `0^(64^k)` with bit `k` of the set.
    Upower6I(MembershipBits),
    Dima3,
    /// The `k`-th DIMA3 word with bit `k` of the set.
    Dima3I(MembershipBits),
}

fn blocks(w: &str) -> Option<Vec<usize>> {
    if w.is_empty() || w.starts_with('1') || w.ends_with('1') || w.contains("11") {
        return None;
    }
    if w.chars().any(|c| c != '0' && c != '1') {
        return None;
    }
    let b: Vec<usize> = w.split('1').map(str::len).collect();
    b.iter().all(|&l| l > 0).then_some(b)
}

fn unary_len(w: &str) -> Option<usize> {
    w.chars().all(|c| c == '0').then_some(w.len())
}

/// Some `m >= 1` with `n = base^m`.
fn log_of(n: usize, base: usize) -> Option<u32> {
    let mut v = base;
    let mut m = 1;
    while v < n {
        v = v.checked_mul(base)?;
        m += 1;
    }
    (v == n).then_some(m)
}

pub fn reference_membership(lang: &Language, w: &str) -> bool {
    match lang {
        Language::Equal => blocks(w).is_some_and(|b| b.len() == 2 && b[0] == b[1]),
        Language::EqualBlocks => reference_membership(&Language::EqualBlocksF { a: 1, b: 0 }, w),
        Language::EqualBlocksF { a, b } => blocks(w).is_some_and(|bl| {
            bl.len() % 2 == 0 && bl.chunks(2).all(|p| p[1] == *a as usize * p[0] + *b as usize)
        }),
        Language::Log => blocks(w).is_some_and(|b| {
            b.len() >= 2 && b.iter().enumerate().all(|(i, &l)| i < 63 && l == 1usize << i)
        }),
        Language::Upower => unary_len(w).is_some_and(|n| log_of(n, 2).is_some()),
        Language::UpowerK(k) => {
            *k >= 1 && unary_len(w).is_some_and(|n| 1usize.checked_shl(*k).is_some_and(|b| log_of(n, b).is_some()))
        }
        Language::Usquare => unary_len(w).is_some_and(|n| {
            let r = (n as f64).sqrt() as usize;
            n >= 1 && (r.saturating_sub(1)..=r + 1).any(|m| m * m == n)
        }),
        Language::Upower6I(bits) => {
            unary_len(w).and_then(|n| log_of(n, 64)).is_some_and(|k| bits.bit(k as usize))
        }
        Language::Dima3 => dima3_index(w).is_some(),
        Language::Dima3I(bits) => dima3_index(w).is_some_and(|k| bits.bit(k)),
    }
}

/// `k` such that `w` is the `k`-th DIMA3 word.
///
/// The word is `0^(t_1) 1 ... 1 0^(t_(m-1)) 1 1 0^(t_m) 1 1^(u_0) 0^(u_1) 1 ... 0^(u_n) 1`
/// with `m = 6k`, `t_i = 2^(i-1)`, `u_0 = 2^(6k)`, `n = 2^(3k)` and every
/// `u_j = 2^(3k) - 1` for `j >= 1`.
pub(crate) fn dima3_index(w: &str) -> Option<usize> {
    let b = w.as_bytes();
    if b.iter().any(|&c| c != b'0' && c != b'1') {
        return None;
    }
    let split = w.find("11")?;
    let head: Vec<usize> = w[..split].split('1').map(str::len).collect();
    let mut pos = split + 2;
    let run = |pos: &mut usize, c: u8| {
        let s = *pos;
        while *pos < b.len() && b[*pos] == c {
            *pos += 1;
        }
        *pos - s
    };
    let t_m = run(&mut pos, b'0');
    if pos >= b.len() || b[pos] != b'1' {
        return None;
    }
    pos += 1;
    let u0 = run(&mut pos, b'1');
    let mut tail = Vec::new();
    while pos < b.len() {
        let u = run(&mut pos, b'0');
        if pos >= b.len() || b[pos] != b'1' || u == 0 {
            return None;
        }
        pos += 1;
        tail.push(u);
    }
    let mut t = head;
    t.push(t_m);
    let m = t.len();
    if m % 6 != 0 || m > 60 {
        return None;
    }
    let k = m / 6;
    let ok = t.iter().enumerate().all(|(i, &l)| l == 1usize << i)
        && u0 == 1usize << (6 * k)
        && tail.len() == 1usize << (3 * k)
        && tail.iter().all(|&u| u == (1usize << (3 * k)) - 1);
    ok.then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_languages() {
        assert!(reference_membership(&Language::Equal, "00100"));
        assert!(!reference_membership(&Language::Equal, "0010"));
        assert!(!reference_membership(&Language::Equal, "1"));
        assert!(reference_membership(&Language::EqualBlocks, "010100100"));
        assert!(!reference_membership(&Language::EqualBlocks, "01010"));
        assert!(reference_membership(&Language::Log, "0100"));
        assert!(reference_membership(&Language::Log, "010010000"));
        assert!(!reference_membership(&Language::Log, "01"));
        assert!(!reference_membership(&Language::Log, "010"));
        assert!(reference_membership(&Language::EqualBlocksF { a: 0, b: 3 }, "0100010001000"));
    }

    #[test]
    fn unary_languages() {
        let u = |n| "0".repeat(n);
        assert!(reference_membership(&Language::Upower, &u(8)));
        assert!(!reference_membership(&Language::Upower, &u(1)));
        assert!(!reference_membership(&Language::Upower, &u(6)));
        assert!(reference_membership(&Language::UpowerK(2), &u(16)));
        assert!(!reference_membership(&Language::UpowerK(2), &u(8)));
        assert!(reference_membership(&Language::Usquare, &u(1)));
        assert!(reference_membership(&Language::Usquare, &u(49)));
        assert!(!reference_membership(&Language::Usquare, &u(0)));
        assert!(!reference_membership(&Language::Usquare, &u(8)));
        let bits = MembershipBits::parse("1").unwrap();
        assert!(reference_membership(&Language::Upower6I(bits.clone()), &u(64)));
        assert!(!reference_membership(&Language::Upower6I(bits), &u(4096)));
    }
}
