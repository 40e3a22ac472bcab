//! Alphabets, letter indices and letter sets.
//!
//! Automata store letters as dense indices into their [`Alphabet`]; words
//! at the public surface are plain strings whose characters must all be
//! alphabet symbols.

use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter inside its alphabet.
pub type Letter = usize;

/// Characters that have a meaning in the expression grammar.
pub const RESERVED: &[char] = &['|', '(', ')', '*', '~', '#'];

/// Largest supported alphabet; letter sets are 64-bit masks.
pub const MAX_LETTERS: usize = 64;

/// A nonempty, duplicate-free, sorted set of single-character symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        symbols.sort_unstable();
        if let Some(w) = symbols.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidAlphabet(format!("duplicate symbol {:?}", w[0])));
        }
        if let Some(c) = symbols
            .iter()
            .find(|c| c.is_whitespace() || RESERVED.contains(c) || **c == ',')
        {
            return Err(Error::InvalidAlphabet(format!("symbol {c:?} is reserved")));
        }
        if symbols.len() > MAX_LETTERS {
            return Err(Error::InvalidAlphabet(format!(
                "at most {MAX_LETTERS} symbols are supported"
            )));
        }
        Ok(Alphabet { symbols })
    }

    /// Parses `"abc"` or `"a,b,c"`; commas and whitespace are separators.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.chars().filter(|c| *c != ',' && !c.is_whitespace()))
    }

    /// The first `n` lowercase latin letters, standing for `a_1 .. a_n`.
    pub fn first_n(n: usize) -> Result<Self> {
        if n > 26 {
            return Err(Error::InvalidParams(format!("{n} letters requested, at most 26")));
        }
        Self::new((0..n as u8).map(|i| (b'a' + i) as char))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter]
    }

    pub fn index_of(&self, symbol: char) -> Option<Letter> {
        self.symbols.binary_search(&symbol).ok()
    }

    pub fn letters(&self) -> std::ops::Range<Letter> {
        0..self.symbols.len()
    }

    pub fn encode(&self, word: &str) -> Result<Vec<Letter>> {
        word.chars()
            .map(|c| self.index_of(c).ok_or(Error::UnknownLetter { letter: c }))
            .collect()
    }

    pub fn decode(&self, word: &[Letter]) -> String {
        word.iter().map(|&a| self.symbols[a]).collect()
    }

    /// Letter set from a string of symbols (separators allowed as in [`Alphabet::parse`]).
    pub fn letter_set(&self, letters: &str) -> Result<LetterSet> {
        let mut set = LetterSet::EMPTY;
        for c in letters.chars().filter(|c| *c != ',' && !c.is_whitespace()) {
            set.insert(self.index_of(c).ok_or(Error::UnknownLetter { letter: c })?);
        }
        Ok(set)
    }

    pub fn full_set(&self) -> LetterSet {
        LetterSet::all(self.len())
    }

    /// Every subset of the alphabet, in mask order.
    pub fn subsets(&self) -> impl Iterator<Item = LetterSet> {
        (0u64..(1u64 << self.len())).map(LetterSet)
    }

    /// Every word of length at most `max_len`, in shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![Vec::new()];
        let mut start = 0;
        for _ in 0..max_len {
            let end = out.len();
            for i in start..end {
                for a in self.letters() {
                    let mut w = out[i].clone();
                    w.push(a);
                    out.push(w);
                }
            }
            start = end;
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A subset of an alphabet as a bit mask over letter indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterSet(pub u64);

/// The letters that infiltration lets both operands consume at once.
/// The empty set gives the plain shuffle.
pub type ShareSet = LetterSet;

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);

    pub fn all(n: usize) -> Self {
        if n >= 64 {
            LetterSet(u64::MAX)
        } else {
            LetterSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, letter: Letter) -> bool {
        letter < 64 && self.0 >> letter & 1 == 1
    }

    pub fn insert(&mut self, letter: Letter) {
        self.0 |= 1u64 << letter;
    }

    pub fn is_subset_of(self, other: LetterSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Letter> {
        (0..64).filter(move |&a| self.contains(a))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn to_string_in(self, alphabet: &Alphabet) -> String {
        self.iter()
            .filter(|&a| a < alphabet.len())
            .map(|a| alphabet.symbol(a))
            .collect()
    }
}

impl FromIterator<Letter> for LetterSet {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        let mut s = LetterSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}
