//! Input alphabets with the two end-markers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index into an alphabet's symbol table: 0 is `¢`, 1 is `$`, letters follow.
pub type SymbolId = usize;

pub const LEFT_END: char = '¢';
pub const RIGHT_END: char = '$';
pub const LEFT: SymbolId = 0;
pub const RIGHT: SymbolId = 1;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        for (i, &c) in letters.iter().enumerate() {
            if c == LEFT_END || c == RIGHT_END {
                return Err(Error::bad(format!("{c:?} is reserved for an end-marker")));
            }
            if letters[..i].contains(&c) {
                return Err(Error::bad(format!("letter {c:?} listed twice")));
            }
        }
        if letters.is_empty() {
            return Err(Error::bad("alphabet has no letters"));
        }
        Ok(Alphabet { letters })
    }

    /// `{0, 1}`.
    pub fn binary() -> Self {
        Alphabet { letters: vec!['0', '1'] }
    }

    /// `{0}`.
    pub fn unary() -> Self {
        Alphabet { letters: vec!['0'] }
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    /// Number of symbols including both end-markers.
    pub fn symbol_count(&self) -> usize {
        self.letters.len() + 2
    }

    pub fn symbol(&self, id: SymbolId) -> char {
        match id {
            LEFT => LEFT_END,
            RIGHT => RIGHT_END,
            i => self.letters[i - 2],
        }
    }

    pub fn id(&self, c: char) -> Option<SymbolId> {
        match c {
            LEFT_END => Some(LEFT),
            RIGHT_END => Some(RIGHT),
            _ => self.letter_id(c),
        }
    }

    pub fn letter_id(&self, c: char) -> Option<SymbolId> {
        self.letters.iter().position(|&l| l == c).map(|i| i + 2)
    }

    /// Letters of `w` as symbol ids, without end-markers.
    pub fn encode(&self, w: &str) -> Result<Vec<SymbolId>> {
        w.chars()
            .map(|c| self.letter_id(c).ok_or(Error::UnknownSymbol(c)))
            .collect()
    }

    /// `¢ w $` as symbol ids.
    pub fn tape(&self, w: &str) -> Result<Vec<SymbolId>> {
        let mut t = Vec::with_capacity(w.len() + 2);
        t.push(LEFT);
        t.extend(self.encode(w)?);
        t.push(RIGHT);
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tape_layout() {
        let a = Alphabet::binary();
        assert_eq!(a.tape("01").unwrap(), vec![0, 2, 3, 1]);
        assert_eq!(a.tape("").unwrap(), vec![0, 1]);
        assert_eq!(a.tape("2"), Err(Error::UnknownSymbol('2')));
        assert_eq!(a.symbol(3), '1');
        assert_eq!(a.id('$'), Some(RIGHT));
    }

    #[test]
    fn rejects_reserved_and_duplicates() {
        assert!(Alphabet::new(['a', '$']).is_err());
        assert!(Alphabet::new(['a', 'a']).is_err());
        assert!(Alphabet::new([]).is_err());
    }
}
