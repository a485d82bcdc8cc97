#![allow(dead_code)]
//! Random instance generators shared by the integration suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use stovar::{column_sums, Matrix, Rational, Scalar, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

/// Small rational `p/q`, `|p| <= 9`, `1 <= q <= 6`.
pub fn rational(rng: &mut impl Rng) -> Rational {
    q(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, |_, _| rational(rng)).unwrap()
}

pub fn dims(rng: &mut impl Rng, max: usize) -> (usize, usize) {
    (rng.gen_range(1..=max), rng.gen_range(1..=max))
}

pub fn vector(rng: &mut impl Rng, n: usize) -> Vector<Rational> {
    Vector::new((0..n).map(|_| rational(rng)).collect()).unwrap()
}

/// Random vector with its mean subtracted, so the entries sum to 0.
pub fn sum_zero_vector(rng: &mut impl Rng, n: usize) -> Vector<Rational> {
    let x = vector(rng, n);
    let mean = stovar::vsum(&x) / Rational::from_int(n as i64);
    Vector::new(x.iter().map(|v| v.clone() - mean.clone()).collect()).unwrap()
}

/// Random matrix whose last row is adjusted so every column sums to `b`.
pub fn typed_matrix(rng: &mut impl Rng, rows: usize, cols: usize, b: &Rational) -> Matrix<Rational> {
    let base = matrix(rng, rows, cols);
    let sums = column_sums(&base);
    let mut out = base.clone();
    for (j, s) in sums.into_iter().enumerate() {
        let last = base.get(rows - 1, j).clone() + b.clone() - s;
        out = out.with_entry(rows - 1, j, last);
    }
    out
}

/// Non-negative matrix of type `a > 0`: a random 0/+ pattern (each entry
/// zero with probability `zero_prob`, no empty column) filled with positive
/// integers, then each column scaled to sum to `a`.
pub fn nonneg_typed(rng: &mut impl Rng, rows: usize, cols: usize, a: &Rational, zero_prob: f64) -> Matrix<Rational> {
    let mut raw: Vec<Vec<i64>> = vec![vec![0; cols]; rows];
    for j in 0..cols {
        for row in raw.iter_mut() {
            if !rng.gen_bool(zero_prob) {
                row[j] = rng.gen_range(1..=9);
            }
        }
        if raw.iter().all(|r| r[j] == 0) {
            let i = rng.gen_range(0..rows);
            raw[i][j] = rng.gen_range(1..=9);
        }
    }
    let sums: Vec<i64> = (0..cols).map(|j| raw.iter().map(|r| r[j]).sum()).collect();
    Matrix::from_fn(rows, cols, |i, j| q(raw[i][j], sums[j]) * a.clone()).unwrap()
}

/// Random Markov matrix built pattern-first.
pub fn markov(rng: &mut impl Rng, n: usize, zero_prob: f64) -> Matrix<Rational> {
    nonneg_typed(rng, n, n, &q(1, 1), zero_prob)
}

/// Type-1 matrix with negative entries: a positive Markov matrix plus a
/// small column-sum-zero perturbation.
pub fn perturbed_markov(rng: &mut impl Rng, n: usize) -> Matrix<Rational> {
    let base = markov(rng, n, 0.0);
    let noise = typed_matrix(rng, n, n, &q(0, 1)).scale(&q(1, 40));
    base.add(&noise).unwrap()
}

pub fn to_float(m: &Matrix<Rational>) -> Matrix<f64> {
    m.map(|x| x.to_f64())
}
