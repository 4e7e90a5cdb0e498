//! Substitutive structure of the derivated sequences: primitive morphisms
//! fixing them, the inventory of distinct derivated sequences of a periodic
//! directive, and the four-letter presentation of one projected example.

use std::collections::HashMap;

use crate::morphisms::{
    parse_directive_word, substitute, BinaryMorphism, DirectiveLetter, DirectiveSpec, Mod2Matrix,
    TernaryMorphism,
};
use crate::rote::{match_block, BlockMatch, PrefixType};
use crate::sturmian::SturmianContext;
use crate::words::{Alphabet, Word};
use crate::{Error, Result};

/// Number of letters used to fingerprint a derivated sequence.
pub const FINGERPRINT_LEN: usize = 200;

/// Least `q >= 1` with `m^q` the identity. Every invertible mod-2 matrix has
/// order 1, 2, or 3.
pub fn minimal_q(m: &Mod2Matrix) -> u32 {
    let mut acc = *m;
    for q in 1..=6 {
        if acc == Mod2Matrix::IDENTITY {
            return q;
        }
        acc = acc.mul(m);
    }
    unreachable!("unimodular mod-2 matrices have order at most 3")
}

/// Factor a binary word exactly into the given blocks and return the block
/// index sequence over `A`, `B`, `C`. The blocks form a prefix code, so the
/// factorization is unique when it exists.
pub fn block_factorize(text: &Word, blocks: &[Word; 3]) -> Result<Word> {
    let letters = text.letters();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < letters.len() {
        match match_block(letters, pos, blocks) {
            BlockMatch::Hit(block, width) => {
                out.push(block);
                pos += width;
            }
            BlockMatch::Short | BlockMatch::Fail(_) => {
                return Err(Error::Factorization { position: pos });
            }
        }
    }
    Word::from_letters(Alphabet::Ternary, out)
}

/// A morphism fixing the sequence derivated at one bispecial index.
#[derive(Clone, Debug)]
pub struct FixingMorphism {
    /// Bispecial index the morphism belongs to.
    pub index: usize,
    /// How many directive letters the construction skips ahead.
    pub span: usize,
    pub prefix_type: PrefixType,
    pub morphism: TernaryMorphism,
}

/// Fixing morphisms for every bispecial index of one full recurrence cycle
/// of a purely periodic directive.
#[derive(Clone, Debug)]
pub struct FixingMorphismList {
    /// Order of the mod-2 period matrix.
    pub q: u32,
    pub period_length: usize,
    /// One entry per index `0..q * period_length`; repeated sequences keep
    /// their own entries.
    pub entries: Vec<FixingMorphism>,
}

fn periodic_context(period: &[DirectiveLetter]) -> Result<SturmianContext> {
    SturmianContext::new(DirectiveSpec::periodic(period.to_vec()))
}

/// Construct, for each bispecial index in one recurrence cycle of the
/// periodic directive, a primitive morphism fixing the derivated sequence of
/// the Rote sequence at that index.
///
/// For index `i` the construction finds the least `m >= 1` at which the
/// prefix kind recurs together with the normalized shifted directive, maps
/// each return word through the composed directive morphism between the two
/// levels (exchanging letters on either side as the normalization demands),
/// and reads the result as a word over the return-word blocks.
pub fn fixing_morphisms(period: &[DirectiveLetter]) -> Result<FixingMorphismList> {
    let ctx = periodic_context(period)?;
    let big_q = period.len();
    let h = period
        .iter()
        .fold(Mod2Matrix::IDENTITY, |acc, &l| acc.mul(&Mod2Matrix::of_letter(l)));
    let q = minimal_q(&h);
    let total = q as usize * big_q;

    let mut entries = Vec::with_capacity(total);
    for i in 0..total {
        let ty = ctx.prefix_type(i);
        let norm = ctx.normalized_shift(i);
        let mut span = None;
        for m in 1..=total {
            if ctx.prefix_type(i + m).kind == ty.kind
                && ctx.normalized_shift(i + m).same_sequence(&norm)
            {
                span = Some(m);
                break;
            }
        }
        let span = span.ok_or_else(|| {
            Error::Internal(format!("no recurrence within one cycle at index {i}"))
        })?;

        let window: Vec<DirectiveLetter> = (i..i + span).map(|j| ctx.letter(j)).collect();
        let phi = BinaryMorphism::compose_directive(&window);
        let entering = ctx.letter(i + span).frequent_letter();
        let mut image_r = phi.image(entering).clone();
        let mut image_s = phi.image(1 - entering).clone();
        if ctx.letter(i) == DirectiveLetter::Beta {
            image_r = image_r.exchanged();
            image_s = image_s.exchanged();
        }

        let blocks = ty.blocks();
        let expanded = blocks
            .clone()
            .map(|pattern| substitute(&pattern, &[image_r.clone(), image_s.clone()]));
        let images = [
            block_factorize(&expanded[0], &blocks)?,
            block_factorize(&expanded[1], &blocks)?,
            block_factorize(&expanded[2], &blocks)?,
        ];
        entries.push(FixingMorphism {
            index: i,
            span,
            prefix_type: ty,
            morphism: TernaryMorphism::new(images)?,
        });
    }
    Ok(FixingMorphismList { q, period_length: big_q, entries })
}

/// Finite check that `sigma` fixes the sequence starting with `prefix`: the
/// image of the prefix must agree with the prefix on their common length.
pub fn verify_fixing(sigma: &TernaryMorphism, prefix: &Word) -> bool {
    let image = sigma.apply(prefix);
    if image.len() >= prefix.len() {
        image.starts_with(prefix)
    } else {
        prefix.starts_with(&image)
    }
}

/// One bispecial index of the inventory.
#[derive(Clone, Debug)]
pub struct InventoryEntry {
    pub index: usize,
    pub prefix_type: PrefixType,
    /// Normalized derivated directive, in canonical form.
    pub directive: DirectiveSpec,
    /// Opening letters of the derivated sequence.
    pub fingerprint: Word,
    /// Equality class among the entries, numbered by first appearance.
    pub class: usize,
}

/// The derivated sequences arising from one recurrence cycle of a periodic
/// directive, grouped up to equality.
#[derive(Clone, Debug)]
pub struct DerivedInventory {
    pub entries: Vec<InventoryEntry>,
    /// Number of distinct derivated sequences.
    pub distinct: usize,
}

/// Enumerate the derivated sequences of the Rote sequence of a periodic
/// directive across one full recurrence cycle, grouping indices whose
/// derivated sequences coincide.
///
/// Two indices are grouped when their prefix types and normalized shifted
/// directives agree; as a redundant check, fingerprints of distinct groups
/// must differ.
pub fn derived_inventory(period: &[DirectiveLetter]) -> Result<DerivedInventory> {
    let ctx = periodic_context(period)?;
    let h = period
        .iter()
        .fold(Mod2Matrix::IDENTITY, |acc, &l| acc.mul(&Mod2Matrix::of_letter(l)));
    let total = minimal_q(&h) as usize * period.len();

    let mut classes: HashMap<(crate::rote::PrefixKind, u32, String), usize> = HashMap::new();
    let mut fingerprints: Vec<Word> = Vec::new();
    let mut entries = Vec::with_capacity(total);
    for i in 0..total {
        let ty = ctx.prefix_type(i);
        let directive = ctx.normalized_shift(i).canonical();
        let key = (ty.kind, ty.k, directive.to_string());
        let next_class = classes.len();
        let class = *classes.entry(key).or_insert(next_class);
        if class == fingerprints.len() {
            fingerprints.push(ctx.rote_derived(i, FINGERPRINT_LEN)?);
        }
        entries.push(InventoryEntry {
            index: i,
            prefix_type: ty,
            directive,
            fingerprint: fingerprints[class].clone(),
            class,
        });
    }
    for a in 0..fingerprints.len() {
        for b in a + 1..fingerprints.len() {
            if fingerprints[a] == fingerprints[b] {
                return Err(Error::Internal(format!(
                    "distinct derivated classes {a} and {b} share a fingerprint"
                )));
            }
        }
    }
    Ok(DerivedInventory { entries, distinct: fingerprints.len() })
}

fn quaternary(text: &str) -> Word {
    Word::parse(Alphabet::Quaternary, text).expect("valid quaternary literal")
}

fn iterate_fixed_point(images: &[Word], start: u8, alphabet: Alphabet, len: usize) -> Word {
    let mut w = Word::from_letters(alphabet, vec![start]).expect("start letter in range");
    while w.len() < len {
        let next = substitute(&w, images);
        debug_assert!(next.starts_with(&w), "morphism is prolongable on the start letter");
        w = next;
    }
    w.prefix(len)
}

/// Prefix of the fixed point of the four-letter morphism with parameter `n`:
/// `1 -> 13`, `2 -> 24`, `3 -> (2413)^n 241`, `4 -> (1324)^n 132`.
pub fn four_letter_fixed_point(n: u32, len: usize) -> Word {
    let reps = |unit: &str, tail: &str| {
        let mut text = unit.repeat(n as usize);
        text.push_str(tail);
        quaternary(&text)
    };
    let images = [
        quaternary("13"),
        quaternary("24"),
        reps("2413", "241"),
        reps("1324", "132"),
    ];
    iterate_fixed_point(&images, 0, Alphabet::Quaternary, len)
}

/// The three-letter companion morphism with parameter `n`:
/// `A -> A^{n+1} B A^n C`, `B -> A^{n+1} C`, `C -> A^{n+1} B`.
pub fn three_letter_morphism(n: u32) -> TernaryMorphism {
    let head = "A".repeat(n as usize + 1);
    let inner = "A".repeat(n as usize);
    let images = [
        Word::ternary(&format!("{head}B{inner}C")),
        Word::ternary(&format!("{head}C")),
        Word::ternary(&format!("{head}B")),
    ];
    TernaryMorphism::new(images).expect("images are nonempty")
}

/// Two views of the same binary sequence: the letter projection
/// `1,3 -> 0; 2,4 -> 1` of the four-letter fixed point, and the image of the
/// three-letter fixed point under `A -> 0011, B -> 011, C -> 001`.
pub fn four_letter_words(n: u32, len: usize) -> (Word, Word) {
    let quaternary_word = four_letter_fixed_point(n, len);
    let projected: Vec<u8> = quaternary_word.letters().iter().map(|&l| l % 2).collect();
    let projected = Word::from_letters(Alphabet::Binary, projected).expect("binary letters");

    let sigma = three_letter_morphism(n);
    let ternary_images = [sigma.image(0).clone(), sigma.image(1).clone(), sigma.image(2).clone()];
    let mut ternary = Word::ternary("A");
    let expand = [Word::binary("0011"), Word::binary("011"), Word::binary("001")];
    loop {
        let binary = substitute(&ternary, &expand);
        if binary.len() >= len {
            return (projected, binary.prefix(len));
        }
        ternary = substitute(&ternary, &ternary_images);
    }
}

/// Check that the two views in [`four_letter_words`] agree to length `len`.
pub fn four_letter_check(n: u32, len: usize) -> bool {
    let (projected, expanded) = four_letter_words(n, len);
    projected == expanded
}

/// Parse a periodic directive given as a bare word over `b`, `B`.
pub fn parse_period(text: &str) -> Result<Vec<DirectiveLetter>> {
    let letters = parse_directive_word(text)?;
    if letters.is_empty() {
        return Err(Error::InvalidDirective("period must be nonempty"));
    }
    Ok(letters)
}
