//! Walk the bispecial prefixes of a Rote sequence and classify each one.
//!
//! The type of the n-th bispecial prefix is read off a product of incidence
//! matrices over GF(2) together with the run length of the directive letter
//! at position n. The walk below shows how the three kinds SU, US, UU cycle
//! for a period-three directive.

use rote_words::{DirectiveSpec, SturmianContext};

fn main() {
    let spec = DirectiveSpec::parse("|bbB").unwrap();
    let context = SturmianContext::new(spec).unwrap();

    println!("directive {}", context.directive());
    println!("{:>2}  {:>14}  {:>13}  type", "n", "bispecial", "matrix");
    for n in 0..9 {
        let w = context.rote_bispecial(n);
        let shown = if w.len() > 14 {
            format!("({} letters)", w.len())
        } else {
            w.to_string()
        };
        println!(
            "{n:>2}  {shown:>14}  {:>13}  {}",
            context.prefix_matrix(n).to_string(),
            context.prefix_type(n)
        );
    }
}
