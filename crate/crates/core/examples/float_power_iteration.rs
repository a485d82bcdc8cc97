//! Floating-point analysis of a three-state weather chain, checked against
//! plain power iteration.
//!
//! Run with `cargo run --example float_power_iteration`.

use stovar::io::{parse_matrix, AnyMatrix, DomainChoice};
use stovar::{analyze, l1_norm, AnalysisOptions, Vector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/weather.json");
    let AnyMatrix::Float(m) = parse_matrix(path.as_ref(), None, DomainChoice::Auto)? else {
        unreachable!("decimal entries load as floats");
    };

    let analysis = analyze(&m, &AnalysisOptions::default())?;
    let e = analysis.stationary.clone().ok_or("no contraction power found")?;
    println!("contraction power p = {}", analysis.contraction_power.unwrap());
    println!("stationary distribution E = {e}");

    let mut x = Vector::basis(3, 0)?;
    for k in 1..=30 {
        x = m.mul_vector(&x)?;
        if k % 5 == 0 {
            let err = l1_norm(&x.sub(&e)?);
            let bound = analysis.decay_bound_at(k).unwrap() * 2.0;
            println!("k = {k:>2}: |M^k e1 - E| = {err:.3e}  (a priori <= {bound:.3e})");
        }
    }
    Ok(())
}
