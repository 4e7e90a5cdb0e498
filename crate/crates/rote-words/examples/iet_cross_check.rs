//! Cross-validate derivated sequences against three-interval exchanges.
//!
//! Each derivated sequence of a Rote sequence is also the coding of an orbit
//! under an exchange of three intervals whose lengths live in a real
//! quadratic field. The parameters are computed exactly, so the comparison
//! below is symbolic, not floating point.

use rote_words::iet::{idoc_check, iet3_code};
use rote_words::{DirectiveSpec, SturmianContext};

fn main() {
    let spec = DirectiveSpec::parse("|bB").unwrap();
    let context = SturmianContext::new(spec).unwrap();

    for n in 0..5 {
        let params = context.iet3_params(n);
        println!("n = {n} ({})", context.prefix_type(n));
        println!("  |I_A| = {}", params.len_a);
        println!("  |I_B| = {}", params.len_b);
        println!("  |I_C| = {}", params.len_c);
        println!("  intercept = {}, permutation {:?}", params.intercept, params.permutation);
        println!("  lengths as floats: {:.6} {:.6} {:.6}",
            params.len_a.to_f64(), params.len_b.to_f64(), params.len_c.to_f64());

        assert!(idoc_check(&params, 400));
        let coded = iet3_code(&params, 240);
        let derived = context.rote_derived(n, 240).unwrap();
        assert_eq!(coded, derived);
        println!("  coding agrees with the derivated sequence on 240 letters");
    }
}
