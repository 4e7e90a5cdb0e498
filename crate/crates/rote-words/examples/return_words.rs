//! Compute return words two ways and check they agree.
//!
//! The closed-form route lifts the two Sturmian return words through the
//! first-difference map to the three Rote return words. The oracle route
//! scans a long prefix and cuts it at consecutive occurrences.

use rote_words::oracle::{scan_adaptive, Naming};
use rote_words::{DirectiveSpec, SturmianContext};

fn main() {
    let spec = DirectiveSpec::parse("|bBb").unwrap();
    let context = SturmianContext::new(spec).unwrap();

    for n in 0..6 {
        let pair = context.return_words(n);
        let triple = context.rote_return_words(n);
        let [a, b, c] = triple.as_array();
        println!("n = {n}");
        println!("  sturmian prefix {:?} has return words r = {}, s = {}",
            context.bispecial_prefix(n).to_string(), pair.r, pair.s);
        println!("  rote prefix {:?} has return words A = {a}, B = {b}, C = {c}",
            context.rote_bispecial(n).to_string());

        let scan = scan_adaptive(
            |len| context.generate_rote(len),
            &context.rote_bispecial(n),
            Naming::FirstAppearance,
            48,
            1 << 21,
        )
        .unwrap();
        assert!(scan.complete);
        let mut scanned: Vec<String> = scan.return_words.iter().map(|w| w.to_string()).collect();
        let mut expected = vec![a.to_string(), b.to_string(), c.to_string()];
        scanned.sort();
        expected.sort();
        assert_eq!(scanned, expected);
        println!("  oracle scan over {} occurrences agrees", scan.occurrences.len());
    }
}
