//! Coins whose bias encodes a set of positive integers.
//!
//! A set `I` with characteristic bits `x_1 x_2 ...` is encoded as the binary
//! fraction `p_I = 0.x_1 0 1 x_2 0 1 ...`. The fixed `0 1` after each payload
//! bit keeps carries from the lower digits away from it, so the `k`-th bit
//! can be read off the head count of `64^k` tosses with error below `1/4`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{inv_pow2, Rational};
use crate::sampler::{trial_rng, uniform, CumulativeRow};

/// Characteristic bits `x_1 x_2 ...` of a set of positive integers; bits
/// past the end are zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MembershipBits(Vec<bool>);

impl MembershipBits {
    pub fn new(bits: Vec<bool>) -> Self {
        MembershipBits(bits)
    }

    /// From a string of `0`/`1`, first character is `x_1`.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::bad(format!("membership bits must be 0/1, got {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(MembershipBits)
    }

    /// `x_k` for `k >= 1`.
    pub fn bit(&self, k: usize) -> bool {
        k >= 1 && self.0.get(k - 1).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for MembershipBits {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MembershipBits::parse(s)
    }
}

impl fmt::Display for MembershipBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// The first `precision` three-digit groups of `p_I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicCoin {
    pub p_hat: Rational,
    /// Strict upper bound on `p_I - p_hat`; equal to `2^(-3 precision)`.
    pub error_bound: Rational,
    pub precision: usize,
}

/// `p_hat` truncated after `precision` groups.
pub fn encode_coin(bits: &MembershipBits, precision: usize) -> DyadicCoin {
    let mut p = Rational::zero();
    for i in 1..=precision {
        if bits.bit(i) {
            p += inv_pow2(3 * i as u64 - 2);
        }
        p += inv_pow2(3 * i as u64);
    }
    DyadicCoin { p_hat: p, error_bound: inv_pow2(3 * precision as u64), precision }
}

/// Toss count used to read bit `k`: `64^k`.
pub fn tosses_for(k: u32) -> Result<u64> {
    if k == 0 || k > 10 {
        return Err(Error::OutOfRange(format!("bit index {k} must be in 1..=10")));
    }
    Ok(1u64 << (6 * k))
}

/// The guess for bit `k` after `heads` heads out of `64^k` tosses: one iff
/// `floor(heads / 8^k) mod 8 >= 4`.
pub fn guess_bit_from_heads(k: u32, heads: u64) -> Result<bool> {
    let n = tosses_for(k)?;
    if heads > n {
        return Err(Error::OutOfRange(format!("{heads} heads out of {n} tosses")));
    }
    Ok((heads >> (3 * k + 2)) & 1 == 1)
}

fn binomials(n: u64) -> Vec<BigUint> {
    let mut c = vec![BigUint::one()];
    for h in 1..=n {
        let next = c[h as usize - 1].clone() * (n - h + 1) / h;
        c.push(next);
    }
    c
}

fn check_exact_scale(k: u32) -> Result<u64> {
    let n = tosses_for(k)?;
    if k > 1 {
        return Err(Error::InfeasibleScale(format!(
            "exact success for k = {k} needs {n} binomial terms; only k = 1 is supported"
        )));
    }
    Ok(n)
}

/// Exact probability that the guess for bit `k` equals `true_bit` when the
/// coin has heads probability `coin.p_hat`.
pub fn exact_guess_success(k: u32, coin: &DyadicCoin, true_bit: bool) -> Result<Rational> {
    let n = check_exact_scale(k)?;
    let p = &coin.p_hat;
    if p.is_zero() || p.is_one() {
        let h = if p.is_zero() { 0 } else { n };
        return Ok(if guess_bit_from_heads(k, h)? == true_bit { Rational::one() } else { Rational::zero() });
    }
    let num = p.numer().to_biguint().expect("non-negative");
    let den = p.denom().to_biguint().expect("positive");
    let tails = &den - &num;
    let c = binomials(n);
    let mut total = BigUint::zero();
    for h in 0..=n {
        if guess_bit_from_heads(k, h)? == true_bit {
            total += &c[h as usize] * num.pow(h as u32) * tails.pow((n - h) as u32);
        }
    }
    Ok(Rational::new(total.into(), den.pow(n as u32).into()))
}

/// Bounds on the success probability valid for every heads probability in
/// `[lo, hi]`.
pub fn guess_success_bounds(k: u32, lo: &Rational, hi: &Rational, true_bit: bool) -> Result<(Rational, Rational)> {
    let n = check_exact_scale(k)?;
    if lo > hi || *lo < Rational::zero() || *hi > Rational::one() {
        return Err(Error::bad("need 0 <= lo <= hi <= 1"));
    }
    let c = binomials(n);
    let one = Rational::one();
    let pw = |r: &Rational, e: u64| crate::rational::pow(r, e);
    let (mut low, mut high) = (Rational::zero(), Rational::zero());
    for h in 0..=n {
        if guess_bit_from_heads(k, h)? == true_bit {
            let cc = Rational::from_integer(c[h as usize].clone().into());
            low += &cc * pw(lo, h) * pw(&(&one - hi), n - h);
            high += &cc * pw(hi, h) * pw(&(&one - lo), n - h);
        }
    }
    Ok((low, high.min(one)))
}

/// Empirical guessing success over independent batches of `64^k` tosses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuessRate {
    pub trials: u64,
    pub correct: u64,
}

impl GuessRate {
    pub fn rate(&self) -> f64 {
        self.correct as f64 / self.trials as f64
    }

    pub fn as_rational(&self) -> Rational {
        crate::rational::rat(self.correct as i64, self.trials as i64)
    }

    /// `|rate - p| <= z sigma` with `sigma^2 = p (1 - p) / trials`, exactly.
    pub fn within_sigmas(&self, p: &Rational, z: i64) -> bool {
        let dev = self.as_rational() - p;
        let var = p * (Rational::one() - p) / crate::rational::int(self.trials as i64);
        &dev * &dev <= var * crate::rational::int(z * z)
    }
}

/// Monte Carlo estimate of [`exact_guess_success`]. Tosses are sampled
/// exactly since `p_hat` is dyadic with at most 126 binary digits here.
pub fn mc_guess_success(k: u32, coin: &DyadicCoin, true_bit: bool, trials: u64, seed: u64) -> Result<GuessRate> {
    if trials == 0 {
        return Err(Error::EmptyTrialSet);
    }
    let n = tosses_for(k)?;
    if k > 3 {
        return Err(Error::InfeasibleScale(format!("{n} tosses per trial")));
    }
    let bits = (3 * coin.precision as u32).clamp(8, 126);
    let row = CumulativeRow::new([coin.p_hat.clone(), Rational::one() - &coin.p_hat], bits);
    let mut correct = 0;
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let mut heads = 0;
        for _ in 0..n {
            if row.pick(uniform(&mut rng, bits)) == Some(0) {
                heads += 1;
            }
        }
        if guess_bit_from_heads(k, heads)? == true_bit {
            correct += 1;
        }
    }
    Ok(GuessRate { trials, correct })
}
