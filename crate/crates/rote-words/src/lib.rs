//! Standard Sturmian sequences, their complementary symmetric Rote companions,
//! and the return-word machinery connecting the two families.
//!
//! A standard Sturmian sequence is built from a *directive sequence* over the
//! two elementary morphisms `b: 0->0, 1->01` and `β: 0->10, 1->1` (serialized
//! as ASCII `b` and `B`). The sliding letter-sum map `S` turns a binary
//! sequence `v` into `u` with `u_i = v_i + v_{i+1} (mod 2)`; a complementary
//! symmetric Rote sequence is an `S`-preimage of a standard Sturmian sequence.
//!
//! The crate computes, exactly and deterministically:
//!
//! * prefixes of both sequences from a directive ([`SturmianContext::generate`],
//!   [`SturmianContext::generate_rote`]),
//! * bispecial prefixes, their return words, and the mod-2 classification of
//!   Rote prefixes into the stability types `SU(k) / US(k) / UU(k)`
//!   ([`SturmianContext::prefix_type`]),
//! * return-word triples and derivated sequences of the Rote sequence
//!   ([`SturmianContext::rote_return_words`], [`SturmianContext::rote_derived`]),
//! * primitive morphisms fixing each derivated sequence
//!   ([`substitutive::fixing_morphisms`]),
//! * exact quadratic slopes and codings of two- and three-interval exchange
//!   transformations that cross-validate the combinatorics ([`iet`]),
//! * brute-force oracles that recompute everything by direct scanning
//!   ([`oracle`]).
//!
//! The `examples/` directory exercises every capability; `src/main.rs` is a
//! thin command-line front end over [`cli`].
//!
//! ```
//! use rote_words::{DirectiveSpec, SturmianContext};
//!
//! let ctx = SturmianContext::new(DirectiveSpec::parse("|bB").unwrap()).unwrap();
//! assert_eq!(ctx.generate(13).to_string(), "0100101001001");
//! assert_eq!(ctx.generate_rote(14).to_string(), "00111001110001");
//! assert_eq!(ctx.prefix_type(1).to_string(), "US(1)");
//! ```

pub mod cli;
pub mod iet;
pub mod morphisms;
pub mod oracle;
pub mod rote;
pub mod sturmian;
pub mod substitutive;
pub mod words;

pub use iet::{IetSpec, Permutation, QuadraticNumber};
pub use morphisms::{BinaryMorphism, DirectiveLetter, DirectiveSpec, Elementary, Mod2Matrix, TernaryMorphism};
pub use rote::{PrefixKind, PrefixType, RoteReturnTriple};
pub use sturmian::{ReturnPair, SturmianContext};
pub use substitutive::{DerivedInventory, FixingMorphism, FixingMorphismList, InventoryEntry};
pub use words::{Alphabet, ParikhMod2, Word};

/// Errors reported by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed serialized input (directive string, word, morphism, number).
    #[error("parse error: {0}")]
    Parse(String),
    /// A directive that cannot describe an aperiodic standard Sturmian
    /// sequence: finite, or with a period that omits one of the letters.
    #[error("invalid directive: {0}")]
    InvalidDirective(&'static str),
    /// Input word is not a prefix of any standard Sturmian sequence.
    #[error("not a standard Sturmian prefix: {0}")]
    NotSturmianPrefix(String),
    /// A word did not factorize over the expected block inventory.
    #[error("block factorization failed at position {position}")]
    Factorization { position: usize },
    /// Mixed alphabets where a single alphabet is required.
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    /// A letter outside the declared alphabet.
    #[error("letter out of range for alphabet")]
    LetterRange,
    /// The interval-exchange input was rational where irrational is required.
    #[error("rational parameter where an irrational is required")]
    RationalParameter,
    /// Interval lengths that do not form a partition of [0, 1).
    #[error("invalid interval exchange data: {0}")]
    InvalidIet(&'static str),
    /// Oracle scan could not reach the requested confidence.
    #[error("oracle scan exhausted its text budget")]
    ScanBudget,
    /// More distinct return words than the supported alphabets can name.
    #[error("more than three distinct return words in scan")]
    TooManyReturnWords,
    /// An internal cross-check failed; indicates a bug, not bad input.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
