//! Convergence of matrix powers through the column variation.
//!
//! A real matrix whose columns all sum to the same number `a` is said to
//! be *of type `a`*. Markov matrices are the non-negative matrices of type
//! 1. This crate works with the *column variation*
//!
//! ```text
//! var A = 1/2 * max_{j,k} |A_j - A_k|_1
//! ```
//!
//! a seminorm that contracts sum-zero vectors (`|A X| <= var A * |X|` when
//! the entries of `X` sum to 0). For a type-1 matrix `M`, a single power
//! with `var(M^p) < 1` is enough for `M^k` to converge to the rank-one
//! projection onto the fixed vector of `M`, negative entries allowed.
//!
//! Every operation is generic over [`Scalar`], realized by exact
//! [`Rational`]s and by `f64`.
//!
//! ```
//! use stovar::{analyze, AnalysisOptions, Matrix, Rational, Verdict};
//!
//! let m = Matrix::<Rational>::from_scaled(5, &[&[0, 2, -4], &[-1, -1, 0], &[6, 4, 9]]).unwrap();
//! let report = analyze(&m, &AnalysisOptions::default()).unwrap();
//! assert_eq!(report.verdict, Verdict::ConvergesTo);
//! assert_eq!(report.contraction_power, Some(2));
//! assert_eq!(report.stationary.unwrap().to_string(), "(-2, 1/3, 8/3)");
//! ```
//!
//! Complex matrices are not supported: the contraction inequality fails
//! over the complex field.

pub mod analysis;
pub mod cli;
pub mod elimination;
pub mod error;
pub mod io;
pub mod matrix;
pub mod nonneg;
pub mod norms;
pub mod report;
pub mod scalar;
pub mod variation;

pub use analysis::{
    analyze, classify_2x2, decay_bound, find_contraction_power, iterate_error_bound, limit_projection,
    stationary_vector, two_by_two, type_eigenvalue_certificate, AnalysisOptions, Classification2x2,
    ContractionPower, ConvergenceAnalysis, DecayParameters, IterateBound, TwoByTwoCase, Verdict,
};
pub use error::{Error, Result};
pub use matrix::{Matrix, RowVector, Vector};
pub use nonneg::{
    criterion_3x3, first_positive_power, pairwise_positive_overlap, pattern_power, pattern_product,
    sign_pattern, strict_variation_test, variation_type_bound_check, Sign, SignPattern,
};
pub use norms::{row_variation_maximizer, variation_maximizer};
pub use scalar::{parse_rational, Domain, Rational, Scalar, Tolerance};
pub use variation::{
    column_sums, l1_norm, row_variation, type_of, variation, vsum, TypeReport, VariationReport,
};
