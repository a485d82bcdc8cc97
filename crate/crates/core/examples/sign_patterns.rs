//! Non-negative matrices through their zero/positive patterns.
//!
//! Run with `cargo run --example sign_patterns`.

use stovar::{
    criterion_3x3, first_positive_power, pairwise_positive_overlap, sign_pattern, strict_variation_test, variation,
    Matrix, Rational, SignPattern, Tolerance,
};

const TOL: Tolerance = Tolerance::DEFAULT;

fn load(name: &str) -> SignPattern {
    let path = format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap().parse().unwrap()
}

fn main() -> stovar::Result<()> {
    for name in ["pattern_k.txt", "pattern_l.txt", "pattern_m.txt"] {
        let p = load(name);
        let regular = first_positive_power(&p, 32)?;
        println!(
            "{name}: first positive power {}, every pair of columns overlaps: {}",
            regular.map_or("none".to_string(), |k| k.to_string()),
            pairwise_positive_overlap(&p)
        );
    }

    println!("\npowers of the cyclic pattern:");
    for (k, q) in load("pattern_m.txt").powers(5)?.iter().enumerate() {
        println!("M^{}:\n{q}\n", k + 1);
    }

    let m = Matrix::<Rational>::from_ratios(&[&[(0, 1), (1, 2), (0, 1)], &[(0, 1), (0, 1), (1, 1)], &[(1, 1), (1, 2), (0, 1)]])?;
    println!("a concrete matrix with that pattern:\n{m}");
    println!("pattern:\n{}", sign_pattern(&m, TOL)?);
    println!("var M < 1: {} (var M = {})", strict_variation_test(&m, TOL)?, variation(&m).value);
    println!("var(M^3) < 1: {} (var(M^3) = {})", criterion_3x3(&m, TOL)?, variation(&m.pow(3)?).value);
    Ok(())
}
