//! Complementary symmetric Rote sequences built over Sturmian sequences:
//! bispecial-prefix classification, return-word triples, and derivated
//! sequences.

use std::fmt;

use crate::morphisms::{substitute, Mod2Matrix};
use crate::sturmian::SturmianContext;
use crate::words::{s_inverse, Alphabet, Word};
use crate::{Error, Result};

/// Classification of a bispecial prefix by the mod-2 Parikh behaviour of the
/// two return words of the underlying Sturmian bispecial prefix: each letter
/// records whether the corresponding return word is stable (`S`) or
/// unstable (`U`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PrefixKind {
    SU,
    US,
    UU,
}

impl fmt::Display for PrefixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrefixKind::SU => write!(f, "SU"),
            PrefixKind::US => write!(f, "US"),
            PrefixKind::UU => write!(f, "UU"),
        }
    }
}

/// Full type of a bispecial prefix: its kind plus the run length `k` of the
/// directive letter at its index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrefixType {
    pub kind: PrefixKind,
    pub k: u32,
}

impl PrefixType {
    /// The return words of the Rote bispecial prefix, written over the
    /// Sturmian return words as `0 = r`, `1 = s`. The three patterns form a
    /// prefix code, so factorizations are unique and greedy decoding works.
    pub fn blocks(&self) -> [Word; 3] {
        let k = self.k as usize;
        let pattern = |text: String| Word::binary(&text);
        match self.kind {
            PrefixKind::SU => [
                pattern("0".to_string()),
                pattern(format!("1{}1", "0".repeat(k + 1))),
                pattern(format!("1{}1", "0".repeat(k))),
            ],
            PrefixKind::US => [
                pattern("00".to_string()),
                pattern("010".to_string()),
                pattern("1".to_string()),
            ],
            PrefixKind::UU => [
                pattern("00".to_string()),
                pattern("01".to_string()),
                pattern("10".to_string()),
            ],
        }
    }
}

impl fmt::Display for PrefixType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.k)
    }
}

/// The three return words of a Rote bispecial prefix, in theorem order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RoteReturnTriple {
    pub a: Word,
    pub b: Word,
    pub c: Word,
}

impl RoteReturnTriple {
    pub fn as_array(&self) -> [&Word; 3] {
        [&self.a, &self.b, &self.c]
    }
}

/// Outcome of matching one block at a position of a binary text.
pub(crate) enum BlockMatch {
    /// Matched block index and its length.
    Hit(u8, usize),
    /// The remaining text is a proper prefix of some block.
    Short,
    /// No block fits here.
    Fail(usize),
}

pub(crate) fn match_block(text: &[u8], pos: usize, patterns: &[Word; 3]) -> BlockMatch {
    let tail = &text[pos..];
    let mut short = false;
    for (idx, pat) in patterns.iter().enumerate() {
        let p = pat.letters();
        if tail.len() >= p.len() {
            if &tail[..p.len()] == p {
                return BlockMatch::Hit(idx as u8, p.len());
            }
        } else if p.starts_with(tail) {
            short = true;
        }
    }
    if short {
        BlockMatch::Short
    } else {
        BlockMatch::Fail(pos)
    }
}

impl SturmianContext {
    /// The first `n` letters of the Rote sequence: the binary sequence with
    /// initial letter `0` whose letter-to-letter difference sequence is the
    /// Sturmian sequence.
    pub fn generate_rote(&self, n: usize) -> Word {
        if n == 0 {
            return Word::empty(Alphabet::Binary);
        }
        s_inverse(&self.generate(n - 1), 0)
    }

    /// The Rote bispecial prefix paired with the `n`-th Sturmian bispecial
    /// prefix; it is one letter longer.
    pub fn rote_bispecial(&self, n: usize) -> Word {
        s_inverse(&self.bispecial_prefix(n), 0)
    }

    /// Mod-2 Parikh matrix of the two return words at index `n`: the product
    /// of the directive letter matrices up to `n`, seeded by the letter at
    /// `n`. Its bottom row reads off the stability kind.
    pub fn prefix_matrix(&self, n: usize) -> Mod2Matrix {
        let mut acc = Mod2Matrix::IDENTITY;
        for i in 0..n {
            acc = acc.mul(&Mod2Matrix::of_letter(self.letter(i)));
        }
        acc.mul(&Mod2Matrix::seed(self.letter(n)))
    }

    /// Type of the `n`-th bispecial prefix of the Rote sequence.
    pub fn prefix_type(&self, n: usize) -> PrefixType {
        let kind = match self.prefix_matrix(n).bottom_row() {
            [false, true] => PrefixKind::SU,
            [true, false] => PrefixKind::US,
            [true, true] => PrefixKind::UU,
            [false, false] => unreachable!("unimodular matrices have a nonzero bottom row"),
        };
        let first = self.letter(n);
        let mut k = 1u32;
        while self.letter(n + k as usize) == first {
            k += 1;
        }
        PrefixType { kind, k }
    }

    /// The three return words of the `n`-th Rote bispecial prefix, obtained
    /// by expanding the type's blocks over the Sturmian return words and
    /// lifting through the difference map.
    pub fn rote_return_words(&self, n: usize) -> RoteReturnTriple {
        let ty = self.prefix_type(n);
        let pair = self.return_words(n);
        let images = [pair.r, pair.s];
        let lift = |pattern: &Word| {
            let expanded = substitute(pattern, &images);
            let lifted = s_inverse(&expanded, 0);
            lifted.prefix(lifted.len() - 1)
        };
        let [pa, pb, pc] = ty.blocks();
        RoteReturnTriple { a: lift(&pa), b: lift(&pb), c: lift(&pc) }
    }

    /// First `len` letters of the sequence derivated from the Rote sequence
    /// at its `n`-th bispecial prefix, written over `A`, `B`, `C` in theorem
    /// order.
    ///
    /// The return words of the Rote prefix group the Sturmian return words
    /// according to the type's blocks, so the derivated sequence is the
    /// unique block decoding of the derivated Sturmian sequence.
    pub fn rote_derived(&self, n: usize, len: usize) -> Result<Word> {
        let patterns = self.prefix_type(n).blocks();
        let max_len = patterns.iter().map(Word::len).max().unwrap();
        let derived = SturmianContext::new(self.normalized_shift(n))?;
        let mut need = (len + 1) * max_len;
        loop {
            let text = derived.generate(need);
            let mut out = Vec::with_capacity(len);
            let mut pos = 0;
            let mut short = false;
            while out.len() < len {
                match match_block(text.letters(), pos, &patterns) {
                    BlockMatch::Hit(block, width) => {
                        out.push(block);
                        pos += width;
                    }
                    BlockMatch::Short => {
                        short = true;
                        break;
                    }
                    BlockMatch::Fail(p) => {
                        return Err(Error::Internal(format!(
                            "derivated sequence fails to factor into return-word blocks at {p}"
                        )));
                    }
                }
            }
            if !short {
                return Word::from_letters(Alphabet::Ternary, out);
            }
            need *= 2;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::DirectiveSpec;

    fn ctx(spec: &str) -> SturmianContext {
        SturmianContext::new(DirectiveSpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn golden_rote_prefix() {
        let c = ctx("|bB");
        assert_eq!(c.generate_rote(14), Word::binary("00111001110001"));
        assert!(c.generate_rote(0).is_empty());
        assert_eq!(c.generate_rote(1), Word::binary("0"));
    }

    #[test]
    fn rote_prefixes_are_nested() {
        let c = ctx("B|bbB");
        let long = c.generate_rote(40);
        assert!(long.starts_with(&c.generate_rote(15)));
    }

    #[test]
    fn golden_prefix_matrices() {
        let c = ctx("|bB");
        assert_eq!(c.prefix_matrix(0), Mod2Matrix::IDENTITY);
        assert_eq!(c.prefix_matrix(1), Mod2Matrix::from_bits([[1, 1], [1, 0]]));
        assert_eq!(c.prefix_matrix(2), Mod2Matrix::from_bits([[0, 1], [1, 1]]));
        assert_eq!(c.prefix_matrix(3), Mod2Matrix::IDENTITY);
    }

    #[test]
    fn golden_prefix_types() {
        let c = ctx("|bB");
        let types: Vec<String> = (0..4).map(|n| c.prefix_type(n).to_string()).collect();
        assert_eq!(types, ["SU(1)", "US(1)", "UU(1)", "SU(1)"]);
    }

    #[test]
    fn run_lengths_feed_the_type() {
        let c = ctx("|bbB");
        assert_eq!(c.prefix_type(0).k, 2);
        assert_eq!(c.prefix_type(1).k, 1);
        assert_eq!(c.prefix_type(2).k, 1);
    }

    #[test]
    fn block_families() {
        let su = PrefixType { kind: PrefixKind::SU, k: 1 };
        assert_eq!(su.blocks(), [Word::binary("0"), Word::binary("1001"), Word::binary("101")]);
        let us = PrefixType { kind: PrefixKind::US, k: 1 };
        assert_eq!(us.blocks(), [Word::binary("00"), Word::binary("010"), Word::binary("1")]);
        let uu = PrefixType { kind: PrefixKind::UU, k: 3 };
        assert_eq!(uu.blocks(), [Word::binary("00"), Word::binary("01"), Word::binary("10")]);
    }

    #[test]
    fn golden_rote_return_words() {
        let c = ctx("|bB");
        let t0 = c.rote_return_words(0);
        assert_eq!(t0.a, Word::binary("0"));
        assert_eq!(t0.b, Word::binary("0111"));
        assert_eq!(t0.c, Word::binary("011"));
        let t1 = c.rote_return_words(1);
        assert_eq!(t1.a, Word::binary("0011"));
        assert_eq!(t1.b, Word::binary("00111"));
        assert_eq!(t1.c, Word::binary("0"));
    }

    #[test]
    fn golden_rote_derived() {
        let c = ctx("|bB");
        assert_eq!(c.rote_derived(0, 8).unwrap(), Word::ternary("ABABAACA"));
        assert_eq!(c.rote_derived(1, 8).unwrap(), Word::ternary("BBCACACB"));
    }

    #[test]
    fn rote_bispecials_extend_sturmian_ones() {
        let c = ctx("|bB");
        assert_eq!(c.rote_bispecial(0), Word::binary("0"));
        assert_eq!(c.rote_bispecial(1), Word::binary("00"));
        assert_eq!(c.rote_bispecial(2), Word::binary("0011"));
        for n in 0..5 {
            assert!(c.generate_rote(40).starts_with(&c.rote_bispecial(n)));
        }
    }
}
