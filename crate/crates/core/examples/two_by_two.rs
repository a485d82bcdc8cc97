//! Every 2x2 type-1 matrix is `[[1-a, b], [a, 1-b]]`; its behaviour
//! depends only on `c = a + b`.
//!
//! Run with `cargo run --example two_by_two`.

use stovar::{classify_2x2, Rational, Scalar, Tolerance};

fn main() {
    let cases = [(3, 10, 1, 5), (1, 1, 1, 1), (3, 2, 1, 1), (1, 2, -1, 2), (0, 1, 0, 1), (-1, 4, -3, 4)];
    for (an, ad, bn, bd) in cases {
        let a = Rational::from_ratio(an, ad);
        let b = Rational::from_ratio(bn, bd);
        let cls = classify_2x2(a, b, Tolerance::DEFAULT);
        print!("a = {:>4}, b = {:>4}: c = {:>4}, var M = {:>3}, {:<16}", cls.a, cls.b, cls.c, cls.variation, cls.case.name());
        match &cls.stationary {
            Some(e) => println!(" E = {e}"),
            None => println!(),
        }
        if let Some(m10) = cls.closed_form_power(10) {
            println!("    M^10 = {:?}", m10.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>());
        }
    }
}
