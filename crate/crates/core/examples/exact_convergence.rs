//! A type-1 matrix with negative entries whose powers still converge.
//!
//! `var M = 6/5` is too large to conclude anything, but `var(M^2) = 18/25`
//! is below 1, which pins down the limit and how fast it is reached.
//!
//! Run with `cargo run --example exact_convergence`.

use stovar::elimination::determinant;
use stovar::{
    analyze, iterate_error_bound, type_eigenvalue_certificate, AnalysisOptions, Matrix, Rational, Scalar, Tolerance,
    Vector,
};

fn main() -> stovar::Result<()> {
    let m = Matrix::<Rational>::from_scaled(5, &[&[0, 2, -4], &[-1, -1, 0], &[6, 4, 9]])?;
    println!("M =\n{m}");

    let analysis = analyze(&m, &AnalysisOptions::default())?;
    println!("var M = {}", analysis.variation.value);
    for (k, v) in analysis.variation_per_power.iter().enumerate() {
        println!("var(M^{}) = {v}", k + 1);
    }

    let e = analysis.stationary.clone().expect("a contraction power exists");
    println!("E = {e}");
    println!("P = lim M^k =\n{}", analysis.projection.as_ref().unwrap());

    // The type is an eigenvalue; the other two can be checked directly.
    let one = type_eigenvalue_certificate(&m, Tolerance::DEFAULT)?;
    println!("type eigenvalue: {one}");
    for lambda in [Rational::from_ratio(2, 5), Rational::from_ratio(1, 5)] {
        let det = determinant(&m.shift_diagonal(&lambda)?)?;
        println!("det(M - {lambda} I) = {det}");
    }

    println!("\n   k  bound on var(M^k)   var(M^k)");
    let mut power = m.clone();
    for k in 1..=8 {
        if k > 1 {
            power = power.matmul(&m)?;
        }
        let bound = analysis.decay_bound_at(k).unwrap();
        println!("{k:>4}  {bound:<18} {}", stovar::variation(&power).value);
    }

    let x = Vector::<Rational>::basis(3, 0)?;
    for k in [1, 2, 5, 10] {
        let b = iterate_error_bound(&m, k, &x, &e, Tolerance::DEFAULT)?;
        println!(
            "|M^{k} e1 - E| = {:.3e} <= {:.3e}",
            b.actual.to_f64(),
            b.bound.to_f64()
        );
    }
    Ok(())
}
