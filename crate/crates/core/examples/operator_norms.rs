//! The column variation is an operator norm twice over: on sum-zero
//! columns acting from the right, and on row vectors measured by their
//! spread acting from the left. Both maximizers are explicit.
//!
//! Run with `cargo run --example operator_norms`.

use stovar::{l1_norm, row_variation, row_variation_maximizer, variation, variation_maximizer, Matrix, Rational, Tolerance};

fn main() -> stovar::Result<()> {
    let a = Matrix::<Rational>::from_scaled(6, &[&[1, 4, -2, 0], &[3, -1, 5, 2], &[-2, 3, 3, 4]])?;
    let report = variation(&a);
    println!("A =\n{a}\nvar A = {} (columns {} and {})", report.value, report.arg_j + 1, report.arg_k + 1);

    let x0 = variation_maximizer(&a)?;
    println!("\nX0 = {x0}, |X0| = {}, |A X0| = {}", l1_norm(&x0), l1_norm(&a.mul_vector(&x0)?));

    let b = Matrix::<Rational>::from_scaled(4, &[&[1, 3, 0], &[2, -1, 5], &[1, 2, -1]])?;
    let z0 = row_variation_maximizer(&b, Tolerance::DEFAULT)?;
    println!("\nB =\n{b}\nvar B = {}", variation(&b).value);
    println!("Z0 = {z0}, row variation {} -> {}", row_variation(&z0), row_variation(&z0.mul_matrix(&b)?));
    Ok(())
}
