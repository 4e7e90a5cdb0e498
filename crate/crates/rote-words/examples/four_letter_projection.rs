//! A family of Rote sequences fixed by four-letter substitutions.
//!
//! The n-th member is obtained two ways: project the fixed point of a
//! four-letter substitution down to binary by letter parity, or expand the
//! fixed point of a three-letter substitution through a block morphism.
//! Both walks land on the same complementary symmetric Rote sequence.

use rote_words::substitutive::{
    four_letter_check, four_letter_fixed_point, four_letter_words, three_letter_morphism,
};

fn main() {
    for n in 0..4 {
        let quaternary = four_letter_fixed_point(n, 40);
        let (projected, expanded) = four_letter_words(n, 60);
        println!("n = {n}");
        println!("  three-letter morphism {}", three_letter_morphism(n));
        println!("  quaternary fixed point {quaternary}...");
        println!("  parity projection      {projected}...");
        assert_eq!(projected, expanded);
        assert!(four_letter_check(n, 400));
        println!("  block expansion agrees on 400 letters");
    }
}
