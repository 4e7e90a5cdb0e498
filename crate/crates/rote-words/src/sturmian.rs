//! Standard Sturmian sequences presented by directive words, their bispecial
//! prefixes, return words, and exact slopes.

use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::iet::QuadraticNumber;
use crate::morphisms::{BinaryMorphism, DirectiveLetter, DirectiveSpec};
use crate::words::{Alphabet, Word};
use crate::{Error, Result};

/// The two return words of a bispecial prefix; `r` is the more frequent one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReturnPair {
    pub r: Word,
    pub s: Word,
}

/// A standard Sturmian sequence, held as its eventually periodic directive
/// word and a cache of composed directive morphisms.
///
/// The sequence itself is the limit `lim_m phi_{z_0} ... phi_{z_m}(0)`; every
/// query works through finite prefixes and exact morphism algebra, so results
/// are never truncated approximations.
pub struct SturmianContext {
    directive: DirectiveSpec,
    compositions: Mutex<Vec<BinaryMorphism>>,
}

impl fmt::Debug for SturmianContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SturmianContext({})", self.directive)
    }
}

impl SturmianContext {
    /// Requires an eventually periodic directive whose period contains both
    /// letters, so the sequence is aperiodic and every letter recurs.
    pub fn new(directive: DirectiveSpec) -> Result<Self> {
        if !directive.is_eventually_periodic() || !directive.has_valid_period() {
            return Err(Error::InvalidDirective(
                "directive must be eventually periodic with both letters in its period",
            ));
        }
        Ok(SturmianContext {
            directive,
            compositions: Mutex::new(vec![BinaryMorphism::identity()]),
        })
    }

    pub fn directive(&self) -> &DirectiveSpec {
        &self.directive
    }

    pub fn letter(&self, n: usize) -> DirectiveLetter {
        self.directive
            .letter_at(n)
            .expect("context directives are infinite")
    }

    /// The composition `phi_{z_0} ∘ ... ∘ phi_{z_{m-1}}` (identity for 0).
    pub fn composition(&self, m: usize) -> BinaryMorphism {
        let mut cache = self.compositions.lock().unwrap();
        while cache.len() <= m {
            let next = cache
                .last()
                .unwrap()
                .compose(&BinaryMorphism::of_letter(self.letter(cache.len() - 1)));
            cache.push(next);
        }
        cache[m].clone()
    }

    /// The first `n` letters of the sequence.
    pub fn generate(&self, n: usize) -> Word {
        let mut m = 0;
        loop {
            let frequent = self.letter(m).frequent_letter();
            let composition = self.composition(m);
            let prefix = composition.image(frequent);
            if prefix.len() >= n {
                return prefix.prefix(n);
            }
            m += 1;
        }
    }

    /// The `n`-th bispecial prefix (the empty word for `n = 0`).
    pub fn bispecial_prefix(&self, n: usize) -> Word {
        let mut w = Word::empty(Alphabet::Binary);
        for i in (0..n).rev() {
            let letter = self.letter(i);
            w = BinaryMorphism::of_letter(letter).apply(&w);
            w.push(letter.frequent_letter());
        }
        w
    }

    /// Return words of the `n`-th bispecial prefix, most frequent first.
    pub fn return_words(&self, n: usize) -> ReturnPair {
        let comp = self.composition(n);
        let (r, s) = match self.letter(n) {
            DirectiveLetter::B => (comp.image(0).clone(), comp.image(1).clone()),
            DirectiveLetter::Beta => (comp.image(1).clone(), comp.image(0).clone()),
        };
        ReturnPair { r, s }
    }

    /// Directive of the sequence derivated at the `n`-th bispecial prefix.
    pub fn derived_directive(&self, n: usize) -> DirectiveSpec {
        self.directive.shift(n)
    }

    /// The derivated directive normalized to start with `b` (letters flipped
    /// when `z_n` is `B`). Two bispecial indices give derivated sequences
    /// equal up to exchanging the letters exactly when these agree.
    pub fn normalized_shift(&self, n: usize) -> DirectiveSpec {
        let shifted = self.directive.shift(n);
        match self.letter(n) {
            DirectiveLetter::B => shifted,
            DirectiveLetter::Beta => shifted.flipped(),
        }
    }
}

/// Recognize a binary word as an image under `phi_b` or `phi_B` and decode
/// it, choosing the morphism from the first letter (`0` selects `phi_b`).
///
/// The final letter of the input is dropped from the decoding when it is a
/// complete image on its own but could also begin the two-letter image, so
/// the returned preimage is reliable for every prefix of a one-sided
/// sequence fixed under the morphism.
pub fn desubstitute(w: &Word) -> Result<(DirectiveLetter, Word)> {
    if w.alphabet() != Alphabet::Binary {
        return Err(Error::AlphabetMismatch);
    }
    if w.is_empty() {
        return Err(Error::Factorization { position: 0 });
    }
    // phi_b: 0 -> 0, 1 -> 01; phi_B: 0 -> 10, 1 -> 1. Either way the marker
    // letter opens every image, and the appended letter flags the two-letter
    // image of the other symbol.
    let (letter, marker) = if w.get(0) == Some(0) {
        (DirectiveLetter::B, 0)
    } else {
        (DirectiveLetter::Beta, 1)
    };
    let mut out = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        if letters[i] != marker {
            return Err(Error::Factorization { position: i });
        }
        if i + 1 == letters.len() {
            // Trailing marker: ambiguous, drop it.
            break;
        }
        if letters[i + 1] != marker {
            out.push(1 - marker);
            i += 2;
        } else {
            out.push(marker);
            i += 1;
        }
    }
    let decoded = Word::from_letters(Alphabet::Binary, out)?;
    Ok((letter, decoded))
}

fn letter_matrix(letter: DirectiveLetter) -> [[BigInt; 2]; 2] {
    match letter {
        DirectiveLetter::B => [
            [BigInt::one(), BigInt::one()],
            [BigInt::zero(), BigInt::one()],
        ],
        DirectiveLetter::Beta => [
            [BigInt::one(), BigInt::zero()],
            [BigInt::one(), BigInt::one()],
        ],
    }
}

fn matrix_product(letters: &[DirectiveLetter]) -> [[BigInt; 2]; 2] {
    let mut acc = [
        [BigInt::one(), BigInt::zero()],
        [BigInt::zero(), BigInt::one()],
    ];
    for &l in letters {
        let m = letter_matrix(l);
        let mut next = [
            [BigInt::zero(), BigInt::zero()],
            [BigInt::zero(), BigInt::zero()],
        ];
        for r in 0..2 {
            for c in 0..2 {
                next[r][c] = &acc[r][0] * &m[0][c] + &acc[r][1] * &m[1][c];
            }
        }
        acc = next;
    }
    acc
}

/// Exact frequency of the letter `0` in the sequence directed by `directive`,
/// as an element of a real quadratic field.
///
/// The period matrix `[[a, b], [c, d]]` has dominant eigenvalue
/// `L = (t + sqrt(t^2 - 4)) / 2` with `t` its trace; the frequency vector of
/// the purely periodic part is the normalized eigenvector `(b, L - a)`, and a
/// preperiod pushes it forward through the preperiod matrix.
pub fn slope(directive: &DirectiveSpec) -> Result<QuadraticNumber> {
    if !directive.is_eventually_periodic() || !directive.has_valid_period() {
        return Err(Error::InvalidDirective(
            "slope needs an eventually periodic directive with both letters in its period",
        ));
    }
    let m = matrix_product(directive.period());
    let trace = &m[0][0] + &m[1][1];
    let disc = &trace * &trace - BigInt::from(4);
    let disc: u64 = (&disc).try_into().expect("discriminant of a valid period is positive");
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let lambda = QuadraticNumber::new(BigRational::from(trace) * &half, half, disc);
    let b = QuadraticNumber::from_rational(BigRational::from(m[0][1].clone()));
    let a = QuadraticNumber::from_rational(BigRational::from(m[0][0].clone()));
    let periodic = &b / &(&(&b + &lambda) - &a);

    if directive.preperiod().is_empty() {
        return Ok(periodic);
    }
    let pre = matrix_product(directive.preperiod());
    let f1 = &QuadraticNumber::one() - &periodic;
    let g0 = &(&QuadraticNumber::from_rational(BigRational::from(pre[0][0].clone())) * &periodic)
        + &(&QuadraticNumber::from_rational(BigRational::from(pre[0][1].clone())) * &f1);
    let g1 = &(&QuadraticNumber::from_rational(BigRational::from(pre[1][0].clone())) * &periodic)
        + &(&QuadraticNumber::from_rational(BigRational::from(pre[1][1].clone())) * &f1);
    Ok(&g0 / &(&g0 + &g1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(spec: &str) -> SturmianContext {
        SturmianContext::new(DirectiveSpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn context_requires_recurrent_directive() {
        assert!(SturmianContext::new(DirectiveSpec::parse("bB").unwrap()).is_err());
        assert!(SturmianContext::new(DirectiveSpec::parse("B|b").unwrap()).is_err());
        assert!(SturmianContext::new(DirectiveSpec::parse("|bB").unwrap()).is_ok());
    }

    #[test]
    fn directive_letters_follow_preperiod_then_period() {
        let c = ctx("bb|bB");
        let rendered: String = (0..6).map(|n| c.letter(n).as_char()).collect();
        assert_eq!(rendered, "bbbBbB");
    }

    #[test]
    fn compositions_match_directive_products() {
        let c = ctx("|bBb");
        let direct = BinaryMorphism::compose_directive(
            &crate::morphisms::parse_directive_word("bBb").unwrap(),
        );
        assert_eq!(c.composition(3).to_string(), direct.to_string());
        assert_eq!(c.composition(0).to_string(), "0->0,1->1");
    }

    #[test]
    fn golden_prefix() {
        let c = ctx("|bB");
        assert_eq!(c.generate(13), Word::binary("0100101001001"));
        assert_eq!(c.generate(0), Word::empty(Alphabet::Binary));
    }

    #[test]
    fn generated_prefixes_are_nested() {
        for spec in ["|bB", "|Bb", "bb|bB", "|bBb", "B|bbB"] {
            let c = ctx(spec);
            let long = c.generate(48);
            assert!(long.starts_with(&c.generate(17)));
        }
    }

    #[test]
    fn preperiod_acts_by_substitution() {
        let outer = ctx("bb|bB");
        let inner = ctx("|bB");
        let pre = BinaryMorphism::compose_directive(
            &crate::morphisms::parse_directive_word("bb").unwrap(),
        );
        assert!(outer.generate(30).starts_with(&pre.apply(&inner.generate(8))));
    }

    #[test]
    fn golden_bispecial_prefixes() {
        let c = ctx("|bB");
        assert_eq!(c.bispecial_prefix(0), Word::empty(Alphabet::Binary));
        assert_eq!(c.bispecial_prefix(1), Word::binary("0"));
        assert_eq!(c.bispecial_prefix(2), Word::binary("010"));
        assert_eq!(c.bispecial_prefix(3), Word::binary("010010"));
    }

    #[test]
    fn golden_return_words() {
        let c = ctx("|bB");
        let p1 = c.return_words(1);
        assert_eq!(p1.r, Word::binary("01"));
        assert_eq!(p1.s, Word::binary("0"));
        let p2 = c.return_words(2);
        assert_eq!(p2.r, Word::binary("010"));
        assert_eq!(p2.s, Word::binary("01"));
    }

    #[test]
    fn normalized_shift_starts_with_b() {
        let c = ctx("|bB");
        for n in 0..6 {
            let norm = c.normalized_shift(n);
            assert_eq!(norm.letter_at(0), Some(DirectiveLetter::B));
        }
        assert!(c.normalized_shift(0).same_sequence(&c.normalized_shift(1)));
    }

    #[test]
    fn desubstitute_examples() {
        let (l, w) = desubstitute(&Word::binary("1011")).unwrap();
        assert_eq!(l, DirectiveLetter::Beta);
        assert_eq!(w, Word::binary("01"));

        let (l, w) = desubstitute(&Word::binary("01001010")).unwrap();
        assert_eq!(l, DirectiveLetter::B);
        assert_eq!(w, Word::binary("1011"));

        let (l, w) = desubstitute(&Word::binary("00")).unwrap();
        assert_eq!(l, DirectiveLetter::B);
        assert_eq!(w, Word::binary("0"));

        assert!(matches!(
            desubstitute(&Word::binary("0110")),
            Err(Error::Factorization { position: 2 })
        ));
        assert!(desubstitute(&Word::empty(Alphabet::Binary)).is_err());
    }

    #[test]
    fn desubstitute_inverts_generation() {
        let c = ctx("|bBb");
        let (letter, decoded) = desubstitute(&c.generate(40)).unwrap();
        assert_eq!(letter, DirectiveLetter::B);
        let shifted = SturmianContext::new(c.directive().shift(1)).unwrap();
        assert!(shifted.generate(decoded.len()) == decoded);
    }

    #[test]
    fn golden_slopes() {
        let tau = QuadraticNumber::golden();
        assert_eq!(slope(&DirectiveSpec::parse("|bB").unwrap()).unwrap(), tau.recip());
        assert_eq!(
            slope(&DirectiveSpec::parse("|Bb").unwrap()).unwrap(),
            &QuadraticNumber::one() - &tau.recip()
        );
        let expected = QuadraticNumber::new(
            BigRational::new(BigInt::from(3), BigInt::from(2)),
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
            3,
        );
        assert_eq!(slope(&DirectiveSpec::parse("|bBb").unwrap()).unwrap(), expected);
    }

    #[test]
    fn preperiod_slope_pullback() {
        let got = slope(&DirectiveSpec::parse("b|bB").unwrap()).unwrap();
        let expected = QuadraticNumber::new(
            BigRational::new(BigInt::one(), BigInt::from(2)),
            BigRational::new(BigInt::one(), BigInt::from(10)),
            5,
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn slope_rejects_degenerate_directives() {
        assert!(slope(&DirectiveSpec::parse("bB").unwrap()).is_err());
        assert!(slope(&DirectiveSpec::parse("|b").unwrap()).is_err());
    }
}
