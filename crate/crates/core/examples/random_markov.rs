//! Random Markov matrices: regular ones converge to a strictly positive
//! distribution, and in dimension 3 convergence is decided by `var(M^3)`.
//!
//! Run with `cargo run --release --example random_markov`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stovar::{
    analyze, criterion_3x3, first_positive_power, sign_pattern, AnalysisOptions, Matrix, Rational, Scalar, Tolerance,
};

const TOL: Tolerance = Tolerance::DEFAULT;

fn random_markov(rng: &mut impl Rng, n: usize, zero_prob: f64) -> Matrix<Rational> {
    let mut cols: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| if rng.gen_bool(zero_prob) { 0 } else { rng.gen_range(1..=9) }).collect())
        .collect();
    for col in cols.iter_mut().filter(|c| c.iter().all(|&x| x == 0)) {
        col[rng.gen_range(0..n)] = 1;
    }
    Matrix::from_fn(n, n, |i, j| Rational::from_ratio(cols[j][i], cols[j].iter().sum())).unwrap()
}

fn main() -> stovar::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let mut shown = 0;
    while shown < 3 {
        let m = random_markov(&mut rng, 4, 0.5);
        let Some(r) = first_positive_power(&sign_pattern(&m, TOL)?, 10)? else { continue };
        let a = analyze(&m, &AnalysisOptions::default())?;
        let e = a.stationary.unwrap();
        println!("regular (M^{r} > 0), contraction power {}, E = {e}", a.contraction_power.unwrap());
        shown += 1;
    }

    let (mut agree, trials) = (0, 500);
    for _ in 0..trials {
        let m = random_markov(&mut rng, 3, 0.55);
        let criterion = criterion_3x3(&m, TOL)?;
        let converges = analyze(&m, &AnalysisOptions::default())?.converges();
        agree += usize::from(criterion == converges);
    }
    println!("\n3x3: var(M^3) < 1 matched the full analysis in {agree}/{trials} samples");

    let m = random_markov(&mut rng, 5, 0.0).map(|x| x.to_f64());
    let a = analyze(&m, &AnalysisOptions::default())?;
    println!("\nfloat 5x5 positive chain: E = {}", a.stationary.unwrap());
    Ok(())
}
