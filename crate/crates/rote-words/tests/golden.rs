//! Frozen end-to-end values exercised through the public API.

use num_rational::BigRational;
use rote_words::iet::{idoc_check, iet3_code};
use rote_words::oracle::occurrences;
use rote_words::substitutive::{
    block_factorize, derived_inventory, fixing_morphisms, four_letter_fixed_point,
    four_letter_words, parse_period, three_letter_morphism,
};
use rote_words::sturmian::{desubstitute, slope};
use rote_words::words::{s_inverse, s_map};
use rote_words::{
    DirectiveLetter, DirectiveSpec, Permutation, QuadraticNumber, SturmianContext, Word,
};

fn ctx(directive: &str) -> SturmianContext {
    SturmianContext::new(DirectiveSpec::parse(directive).unwrap()).unwrap()
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn fibonacci_prefixes() {
    let context = ctx("|bB");
    assert_eq!(context.generate(13).to_string(), "0100101001001");
    assert_eq!(context.generate_rote(14).to_string(), "00111001110001");
    let u = context.generate(40);
    let v = context.generate_rote(41);
    assert_eq!(s_map(&v), u);
    assert_eq!(s_inverse(&u, 0), v);
}

#[test]
fn preperiodic_prefixes() {
    let context = ctx("b|bB");
    let u = context.generate(20);
    assert_eq!(u.to_string(), "00100010010001000100");
    let shifted = ctx("|bB").generate(12);
    let (letter, preimage) = desubstitute(&context.generate(25)).unwrap();
    assert_eq!(letter, DirectiveLetter::B);
    assert!(preimage.starts_with(&shifted));
}

#[test]
fn bispecial_ladder() {
    let context = ctx("|bB");
    let expected = ["", "0", "010", "010010", "01001010010"];
    for (n, text) in expected.iter().enumerate() {
        assert_eq!(context.bispecial_prefix(n).to_string(), *text);
        let rote = context.rote_bispecial(n);
        assert_eq!(rote, s_inverse(&context.bispecial_prefix(n), 0));
        assert_eq!(rote.len(), text.len() + 1);
    }
}

#[test]
fn return_word_pairs() {
    let context = ctx("|bB");
    let pair = context.return_words(1);
    assert_eq!(pair.r.to_string(), "01");
    assert_eq!(pair.s.to_string(), "0");
    let pair = context.return_words(2);
    assert_eq!(pair.r.to_string(), "010");
    assert_eq!(pair.s.to_string(), "01");
}

#[test]
fn rote_return_triples() {
    let context = ctx("|bB");
    let triple = context.rote_return_words(0);
    let [a, b, c] = triple.as_array();
    assert_eq!(a.to_string(), "0");
    assert_eq!(b.to_string(), "0111");
    assert_eq!(c.to_string(), "011");
    let triple = context.rote_return_words(1);
    let [a, b, c] = triple.as_array();
    assert_eq!(a.to_string(), "0011");
    assert_eq!(b.to_string(), "00111");
    assert_eq!(c.to_string(), "0");
}

#[test]
fn prefix_types_walk() {
    let context = ctx("|bbB");
    let walk: Vec<String> = (0..6).map(|n| context.prefix_type(n).to_string()).collect();
    assert_eq!(walk, ["SU(2)", "SU(1)", "US(1)", "UU(2)", "US(1)", "UU(1)"]);
}

#[test]
fn derivated_words() {
    let context = ctx("|bB");
    assert_eq!(context.rote_derived(0, 8).unwrap().to_string(), "ABABAACA");
    assert_eq!(context.rote_derived(1, 8).unwrap().to_string(), "BBCACACB");
    let long = context.rote_derived(0, 60).unwrap();
    assert!(long.to_string().starts_with("ABABAACAACAABABAAC"));
}

#[test]
fn occurrence_positions() {
    let context = ctx("|bB");
    let text = context.generate(13);
    let factor = Word::binary("010");
    assert_eq!(occurrences(&factor, &text), [0, 3, 5, 8]);
}

#[test]
fn desubstitution_cases() {
    let (letter, preimage) = desubstitute(&Word::binary("1011")).unwrap();
    assert_eq!(letter, DirectiveLetter::Beta);
    assert_eq!(preimage.to_string(), "01");

    let (letter, preimage) = desubstitute(&Word::binary("01001010")).unwrap();
    assert_eq!(letter, DirectiveLetter::B);
    assert_eq!(preimage.to_string(), "1011");

    let (letter, preimage) = desubstitute(&Word::binary("00")).unwrap();
    assert_eq!(letter, DirectiveLetter::B);
    assert_eq!(preimage.to_string(), "0");
}

#[test]
fn slopes_are_exact() {
    let golden = QuadraticNumber::golden();
    let expected = &golden - &QuadraticNumber::one();
    assert_eq!(slope(&DirectiveSpec::parse("|bB").unwrap()).unwrap(), expected);

    let expected = QuadraticNumber::new(ratio(3, 2), ratio(-1, 2), 5);
    assert_eq!(slope(&DirectiveSpec::parse("|Bb").unwrap()).unwrap(), expected);

    let expected = QuadraticNumber::new(ratio(3, 2), ratio(-1, 2), 3);
    assert_eq!(slope(&DirectiveSpec::parse("|bBb").unwrap()).unwrap(), expected);

    let expected = QuadraticNumber::new(ratio(1, 2), ratio(1, 10), 5);
    assert_eq!(slope(&DirectiveSpec::parse("b|bB").unwrap()).unwrap(), expected);
}

#[test]
fn interval_exchange_parameters() {
    let context = ctx("|bB");
    let spec = context.iet3_params(0);
    let alpha = &QuadraticNumber::golden() - &QuadraticNumber::one();
    let one = QuadraticNumber::one();
    assert_eq!(spec.len_a, alpha);
    assert_eq!(spec.len_b, &(&alpha + &alpha) - &one);
    assert_eq!(spec.len_c, &(&one + &one) - &(&(&alpha + &alpha) + &alpha));
    assert_eq!(spec.intercept, &one - &alpha);
    assert_eq!(spec.permutation, Permutation::P321);
    assert!(idoc_check(&spec, 300));
    assert_eq!(iet3_code(&spec, 8).to_string(), "ABABAACA");
}

#[test]
fn inventory_counts() {
    let counts = [("bB", 6, 3), ("bBb", 6, 6), ("BbbB", 4, 2), ("BBbb", 4, 4)];
    for (period, entries, distinct) in counts {
        let inventory = derived_inventory(&parse_period(period).unwrap()).unwrap();
        assert_eq!(inventory.entries.len(), entries, "entries for {period}");
        assert_eq!(inventory.distinct, distinct, "distinct for {period}");
    }
}

#[test]
fn fixing_morphism_table() {
    let list = fixing_morphisms(&parse_period("bB").unwrap()).unwrap();
    assert_eq!(list.q, 3);
    assert_eq!(list.entries.len(), 6);
    let spans: Vec<usize> = list.entries.iter().map(|e| e.span).collect();
    assert_eq!(spans, [3, 3, 3, 3, 3, 3]);
    for i in 0..3 {
        assert_eq!(
            list.entries[i].morphism.to_string(),
            list.entries[i + 3].morphism.to_string()
        );
    }

    let list = fixing_morphisms(&parse_period("bBb").unwrap()).unwrap();
    assert_eq!(list.q, 2);
    assert_eq!(
        list.entries[2].morphism.to_string(),
        "A->ACACACBABABABAC,B->ACACACBABABAB,C->ACACACBABABAC"
    );
}

#[test]
fn block_factorization_roundtrip() {
    let context = ctx("|bB");
    let blocks = context.prefix_type(1).blocks();
    let coded = block_factorize(&Word::binary("00010100"), &blocks).unwrap();
    assert_eq!(coded.to_string(), "ABCA");
}

#[test]
fn four_letter_values() {
    assert_eq!(four_letter_fixed_point(0, 10).to_string(), "1324124132");
    let (projected, expanded) = four_letter_words(0, 12);
    assert_eq!(projected.to_string(), "001101100100");
    assert_eq!(projected, expanded);
    assert_eq!(three_letter_morphism(0).to_string(), "A->ABC,B->AC,C->AB");
    assert_eq!(three_letter_morphism(1).to_string(), "A->AABAC,B->AAC,C->AAB");
}
