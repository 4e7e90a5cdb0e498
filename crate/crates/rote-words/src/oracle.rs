//! Scanning oracle: return words and derivated sequences computed directly
//! from long prefixes by occurrence search, with no morphism algebra. Used to
//! cross-validate the structural constructions.

use crate::words::{Alphabet, Word};
use crate::{Error, Result};

/// All start positions of `factor` in `text`, overlaps included.
pub fn occurrences(factor: &Word, text: &Word) -> Vec<usize> {
    assert!(!factor.is_empty(), "occurrences of the empty factor are everywhere");
    assert_eq!(text.alphabet(), factor.alphabet(), "alphabet mismatch");
    let t = text.letters();
    let f = factor.letters();
    if f.len() > t.len() {
        return Vec::new();
    }
    (0..=t.len() - f.len())
        .filter(|&i| &t[i..i + f.len()] == f)
        .collect()
}

/// How scanned return words receive letters.
#[derive(Clone, Copy)]
pub enum Naming<'a> {
    /// Letters in order of first appearance in the text.
    FirstAppearance,
    /// Fixed, externally supplied letter assignment; a scanned return word
    /// outside this list is an error.
    Canonical(&'a [Word]),
}

/// Return words of a factor read off a finite text.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub occurrences: Vec<usize>,
    /// Distinct return words, indexed by their letter.
    pub return_words: Vec<Word>,
    /// The slice sequence coded over the return-word letters.
    pub derivated_prefix: Word,
    /// Whether at least three further slices follow the one that introduced
    /// the last new return word, suggesting the set is exhaustive.
    pub complete: bool,
}

/// Scan `text` for `prefix` and cut it into return words: the slices between
/// consecutive occurrences.
pub fn return_words_scan(prefix: &Word, text: &Word, naming: Naming) -> Result<ScanResult> {
    let occ = occurrences(prefix, text);
    let mut names: Vec<Word> = match naming {
        Naming::FirstAppearance => Vec::new(),
        Naming::Canonical(words) => words.to_vec(),
    };
    let fixed = matches!(naming, Naming::Canonical(_));
    let mut seen = vec![false; names.len()];
    let mut letters = Vec::new();
    let mut last_new = None;
    for pair in occ.windows(2) {
        let slice = text.slice(pair[0], pair[1]);
        let idx = match names.iter().position(|n| *n == slice) {
            Some(i) => i,
            None if fixed => {
                return Err(Error::Internal(format!(
                    "scanned return word {slice} is not in the supplied set"
                )));
            }
            None => {
                names.push(slice);
                seen.push(false);
                names.len() - 1
            }
        };
        if !seen[idx] {
            seen[idx] = true;
            last_new = Some(letters.len());
        }
        letters.push(idx as u8);
    }
    if names.len() > 3 {
        return Err(Error::TooManyReturnWords);
    }
    let alphabet = if names.len() <= 2 { Alphabet::Binary } else { Alphabet::Ternary };
    let complete = match last_new {
        Some(at) => letters.len() - 1 - at >= 3,
        None => false,
    };
    Ok(ScanResult {
        occurrences: occ,
        return_words: names,
        derivated_prefix: Word::from_letters(alphabet, letters)?,
        complete,
    })
}

/// The derivated sequence of `text` with respect to its prefix `prefix`,
/// read directly off the text: the sequence of return-word letters under the
/// chosen naming. Up to a permutation of letters the result is independent
/// of the naming mode.
pub fn derived_scan(prefix: &Word, text: &Word, naming: Naming) -> Result<Word> {
    Ok(return_words_scan(prefix, text, naming)?.derivated_prefix)
}

/// Run [`return_words_scan`] on prefixes produced by `generate`, doubling the
/// prefix length until the scan is complete with at least `min_occurrences`
/// occurrences, or the length budget `max_len` is exhausted.
pub fn scan_adaptive<F>(
    generate: F,
    factor: &Word,
    naming: Naming,
    min_occurrences: usize,
    max_len: usize,
) -> Result<ScanResult>
where
    F: Fn(usize) -> Word,
{
    let mut len = 4 * (factor.len() + 1);
    loop {
        let text = generate(len.min(max_len));
        let result = return_words_scan(factor, &text, naming)?;
        if result.occurrences.len() >= min_occurrences && result.complete {
            return Ok(result);
        }
        if len >= max_len {
            return Err(Error::ScanBudget);
        }
        len *= 2;
    }
}
