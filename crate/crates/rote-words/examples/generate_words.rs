//! Generate Sturmian and Rote prefixes from a directive word.
//!
//! A directive like `b|bB` names an eventually periodic composition of the
//! two elementary morphisms; the part before `|` is the preperiod. The Rote
//! sequence is the unique 0-started preimage of the Sturmian sequence under
//! the first-difference map.

use rote_words::words::{s_inverse, s_map};
use rote_words::{DirectiveSpec, SturmianContext};

fn main() {
    for directive in ["|bB", "|bBb", "b|bB", "Bb|bbB"] {
        let spec = DirectiveSpec::parse(directive).unwrap();
        let context = SturmianContext::new(spec).unwrap();
        let sturmian = context.generate(48);
        let rote = context.generate_rote(48);
        println!("directive {directive}");
        println!("  sturmian {sturmian}");
        println!("  rote     {rote}");
        assert_eq!(s_map(&rote), sturmian.prefix(47));
        assert_eq!(s_inverse(&sturmian, 0).prefix(48), rote);
    }
}
