//! Primitive morphisms fixing the derivated sequences of a Rote sequence.
//!
//! For a purely periodic directive every derivated sequence is a fixed point
//! of a primitive ternary morphism. The construction pairs each bispecial
//! index with the next index at which both the prefix kind and the shifted
//! directive recur, then reads the mapped return words over the blocks.

use rote_words::substitutive::{fixing_morphisms, parse_period, verify_fixing};
use rote_words::{DirectiveSpec, SturmianContext};

fn main() {
    for period in ["bB", "bBb"] {
        let list = fixing_morphisms(&parse_period(period).unwrap()).unwrap();
        let spec = DirectiveSpec::periodic(parse_period(period).unwrap());
        let context = SturmianContext::new(spec).unwrap();

        println!("period {period} (matrix order q = {})", list.q);
        for entry in &list.entries {
            let prefix = context.rote_derived(entry.index, 160).unwrap();
            let fixed = verify_fixing(&entry.morphism, &prefix);
            assert!(entry.morphism.is_primitive());
            assert!(fixed);
            println!("  sigma_{} spans {} levels: {}", entry.index, entry.span, entry.morphism);
        }
        println!();
    }
}
