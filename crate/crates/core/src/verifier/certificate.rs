use std::fmt;

use crate::error::{Error, Result};

/// A certificate: a finite prefix followed by one symbol repeated forever.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub prefix: String,
    pub tail: char,
}

impl Certificate {
    pub fn new(prefix: impl Into<String>, tail: char) -> Self {
        Certificate { prefix: prefix.into(), tail }
    }

    /// Prefix followed by `$` forever.
    pub fn dollar(prefix: impl Into<String>) -> Self {
        Certificate::new(prefix, '$')
    }

    pub fn symbol_at(&self, j: usize) -> char {
        self.prefix.chars().nth(j).unwrap_or(self.tail)
    }

    /// Shortest prefix describing the same infinite string.
    pub fn canonical(&self) -> Certificate {
        Certificate::new(self.prefix.trim_end_matches(self.tail), self.tail)
    }

    /// Same infinite string, regardless of how the prefix was cut.
    pub fn equivalent(&self, other: &Certificate) -> bool {
        self.tail == other.tail && self.canonical().prefix == other.canonical().prefix
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefix)
    }
}

/// Two certificates read as one tape over pairs of symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoTrackCertificate {
    pub track1: Certificate,
    pub track2: Certificate,
}

/// A certificate resolved against a verifier's certificate alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tape {
    pub prefix: Vec<usize>,
    pub tail: usize,
}

impl Tape {
    pub fn symbol_at(&self, j: usize) -> usize {
        self.prefix.get(j).copied().unwrap_or(self.tail)
    }
}

/// Anything that can be laid out on a verifier's certificate tape.
pub trait CertificateSource {
    fn to_tape(&self, alphabet: &[String]) -> Result<Tape>;
}

fn lookup(alphabet: &[String], label: &str) -> Result<usize> {
    alphabet
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| Error::bad(format!("certificate symbol {label:?} not in the certificate alphabet")))
}

impl CertificateSource for Certificate {
    fn to_tape(&self, alphabet: &[String]) -> Result<Tape> {
        let prefix = self
            .prefix
            .chars()
            .map(|c| lookup(alphabet, c.encode_utf8(&mut [0; 4])))
            .collect::<Result<_>>()?;
        Ok(Tape { prefix, tail: lookup(alphabet, self.tail.encode_utf8(&mut [0; 4]))? })
    }
}

impl CertificateSource for TwoTrackCertificate {
    fn to_tape(&self, alphabet: &[String]) -> Result<Tape> {
        let n = self.track1.prefix.chars().count().max(self.track2.prefix.chars().count());
        let pair = |a: char, b: char| lookup(alphabet, &format!("{a}{b}"));
        let prefix = (0..n)
            .map(|j| pair(self.track1.symbol_at(j), self.track2.symbol_at(j)))
            .collect::<Result<_>>()?;
        Ok(Tape { prefix, tail: pair(self.track1.tail, self.track2.tail)? })
    }
}

impl CertificateSource for Tape {
    fn to_tape(&self, alphabet: &[String]) -> Result<Tape> {
        if self.prefix.iter().chain([&self.tail]).any(|&c| c >= alphabet.len()) {
            return Err(Error::bad("tape symbol out of range"));
        }
        Ok(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equivalence_ignores_trailing_tail() {
        let a = Certificate::dollar("011$");
        let b = Certificate::dollar("011$$$");
        assert_ne!(a, b);
        assert!(a.equivalent(&b));
        assert!(!a.equivalent(&Certificate::dollar("01")));
        assert_eq!(a.symbol_at(10), '$');
    }

    #[test]
    fn two_tracks_pad_with_tails() {
        let alpha: Vec<String> = ["0a", "0$", "1a", "$a", "$$"].iter().map(|s| s.to_string()).collect();
        let t = TwoTrackCertificate { track1: Certificate::dollar("01"), track2: Certificate::dollar("aaa") };
        let tape = t.to_tape(&alpha).unwrap();
        assert_eq!(tape.prefix, vec![0, 2, 3]);
        assert_eq!(tape.tail, 4);
    }
}
