//! Derivated sequences of a Rote sequence and their inventory.
//!
//! Derivating at the n-th bispecial prefix recodes the sequence over its
//! three return words. For a purely periodic directive only finitely many
//! derivated sequences appear; the inventory groups one full recurrence
//! cycle of indices into equality classes.

use rote_words::substitutive::{derived_inventory, parse_period};
use rote_words::{DirectiveSpec, SturmianContext};

fn main() {
    let context = SturmianContext::new(DirectiveSpec::parse("|bB").unwrap()).unwrap();
    for n in 0..4 {
        let word = context.rote_derived(n, 40).unwrap();
        println!("d_{n} = {word}...");
    }
    println!();

    for period in ["bB", "bBb", "BbbB", "BBbb"] {
        let inventory = derived_inventory(&parse_period(period).unwrap()).unwrap();
        println!(
            "period {period}: {} indices fall into {} classes",
            inventory.entries.len(),
            inventory.distinct
        );
        for entry in &inventory.entries {
            println!(
                "  index {} type {} class {} opens {}...",
                entry.index,
                entry.prefix_type,
                entry.class,
                entry.fingerprint.prefix(24)
            );
        }
    }
}
