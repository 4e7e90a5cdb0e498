//! Finite words over small alphabets and the letter-sum map `S`.

use std::collections::HashSet;
use std::fmt;

use crate::{Error, Result};

/// Alphabets used throughout the crate, with their canonical letter names.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Alphabet {
    /// `0`, `1`: Sturmian and Rote sequences, words over return words r/s.
    Binary,
    /// `A`, `B`, `C`: derivated sequences of Rote sequences.
    Ternary,
    /// `1`, `2`, `3`, `4`: the four-letter companion system.
    Quaternary,
}

impl Alphabet {
    pub fn size(self) -> usize {
        match self {
            Alphabet::Binary => 2,
            Alphabet::Ternary => 3,
            Alphabet::Quaternary => 4,
        }
    }

    fn symbols(self) -> &'static [char] {
        match self {
            Alphabet::Binary => &['0', '1'],
            Alphabet::Ternary => &['A', 'B', 'C'],
            Alphabet::Quaternary => &['1', '2', '3', '4'],
        }
    }

    pub fn render(self, letter: u8) -> char {
        self.symbols()[letter as usize]
    }

    pub fn letter_of(self, c: char) -> Option<u8> {
        self.symbols().iter().position(|&s| s == c).map(|i| i as u8)
    }
}

/// An immutable finite word. Letters are stored as indices into the alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<u8>,
}

impl Word {
    pub fn empty(alphabet: Alphabet) -> Self {
        Word { alphabet, letters: Vec::new() }
    }

    pub fn from_letters(alphabet: Alphabet, letters: Vec<u8>) -> Result<Self> {
        if letters.iter().any(|&l| l as usize >= alphabet.size()) {
            return Err(Error::LetterRange);
        }
        Ok(Word { alphabet, letters })
    }

    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            let l = alphabet
                .letter_of(c)
                .ok_or_else(|| Error::Parse(format!("letter {c:?} not in alphabet")))?;
            letters.push(l);
        }
        Ok(Word { alphabet, letters })
    }

    /// Convenience constructor for binary words; panics on non-`0/1` input.
    pub fn binary(text: &str) -> Self {
        Word::parse(Alphabet::Binary, text).expect("binary word literal")
    }

    /// Convenience constructor for ternary words; panics on bad input.
    pub fn ternary(text: &str) -> Self {
        Word::parse(Alphabet::Ternary, text).expect("ternary word literal")
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn get(&self, i: usize) -> Option<u8> {
        self.letters.get(i).copied()
    }

    pub fn push(&mut self, letter: u8) {
        assert!((letter as usize) < self.alphabet.size(), "letter out of range");
        self.letters.push(letter);
    }

    pub fn extend(&mut self, other: &Word) {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word { alphabet: self.alphabet, letters: self.letters[..n.min(self.len())].to_vec() }
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word { alphabet: self.alphabet, letters: self.letters[start..end].to_vec() }
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.alphabet == other.alphabet && self.letters.starts_with(&other.letters)
    }

    /// Binary letter exchange `0 <-> 1`.
    pub fn exchanged(&self) -> Word {
        assert_eq!(self.alphabet, Alphabet::Binary, "exchange is a binary operation");
        Word {
            alphabet: Alphabet::Binary,
            letters: self.letters.iter().map(|&l| 1 - l).collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", self.alphabet.render(l))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Parity of the two letter counts of a binary word.
///
/// A word is *stable* when it contains an even number of `1`s: appending it to
/// a Rote sequence position returns to the same letter of the preimage.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ParikhMod2 {
    pub zeros_odd: bool,
    pub ones_odd: bool,
}

impl ParikhMod2 {
    pub fn is_stable(self) -> bool {
        !self.ones_odd
    }

    /// Parity vector of a concatenation.
    pub fn xor(self, other: ParikhMod2) -> ParikhMod2 {
        ParikhMod2 {
            zeros_odd: self.zeros_odd ^ other.zeros_odd,
            ones_odd: self.ones_odd ^ other.ones_odd,
        }
    }
}

/// Letter-count parities of a binary word.
pub fn parikh_mod2(w: &Word) -> ParikhMod2 {
    assert_eq!(w.alphabet(), Alphabet::Binary);
    let ones = w.letters().iter().filter(|&&l| l == 1).count();
    ParikhMod2 {
        zeros_odd: (w.len() - ones) % 2 == 1,
        ones_odd: ones % 2 == 1,
    }
}

/// The sliding letter-sum map: `s_map(v)_i = v_i + v_{i+1} (mod 2)`.
///
/// The image is one letter shorter than the input; words of length at most one
/// map to the empty word. Exchanging the letters of `v` does not change the
/// image.
pub fn s_map(v: &Word) -> Word {
    assert_eq!(v.alphabet(), Alphabet::Binary);
    let ls = v.letters();
    let letters = ls.windows(2).map(|w| w[0] ^ w[1]).collect();
    Word { alphabet: Alphabet::Binary, letters }
}

/// The inverse of [`s_map`] once the first letter is chosen:
/// `v_0 = first`, `v_{i+1} = v_i + u_i (mod 2)`.
pub fn s_inverse(u: &Word, first: u8) -> Word {
    assert_eq!(u.alphabet(), Alphabet::Binary);
    assert!(first < 2, "first letter must be 0 or 1");
    let mut letters = Vec::with_capacity(u.len() + 1);
    let mut cur = first;
    letters.push(cur);
    for &l in u.letters() {
        cur ^= l;
        letters.push(cur);
    }
    Word { alphabet: Alphabet::Binary, letters }
}

/// Number of distinct length-`n` factors of `text`.
///
/// Returns 0 when `n` exceeds the text length, and 1 for `n = 0`.
pub fn factor_complexity(text: &Word, n: usize) -> usize {
    if n > text.len() {
        return 0;
    }
    if n == 0 {
        return 1;
    }
    let set: HashSet<&[u8]> = text.letters().windows(n).collect();
    set.len()
}
