//! Operator-norm readings of the column variation, with explicit maximizers.
//!
//! `var A` is the largest `|A X|` over vectors with `|X| = 1` and entry sum
//! zero, and for a typed `B` it is also the largest `var(Z B)` over rows
//! with `var Z = 1`. Both maxima are attained at vectors built from the
//! column pair that realizes the variation.
//!
//! The textbook argument for the second witness says the two chosen
//! columns each sum to zero; only their difference needs to, which holds
//! for any typed matrix.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, RowVector, Vector};
use crate::scalar::{Scalar, Tolerance};
use crate::variation::{type_of, variation};

/// `X0` with `+1/2` at `arg_j`, `-1/2` at `arg_k`: `|X0| = 1`,
/// `vsum X0 = 0` and `|A X0| = var A`.
pub fn variation_maximizer<T: Scalar>(a: &Matrix<T>) -> Result<Vector<T>> {
    if a.cols() < 2 {
        return Err(Error::TooFewColumns { found: a.cols() });
    }
    let r = variation(a);
    let half = T::from_ratio(1, 2);
    Vector::new(
        (0..a.cols())
            .map(|i| {
                if i == r.arg_j {
                    half.clone()
                } else if i == r.arg_k {
                    -half.clone()
                } else {
                    T::zero()
                }
            })
            .collect(),
    )
}

/// `Z0` with `z_j = +1` where `b(j, k0) > b(j, l0)` and `-1` otherwise, for
/// the variation pair `(k0, l0)` of `B`. Then `var Z0 = 1` and
/// `var(Z0 B) = var B`.
pub fn row_variation_maximizer<T: Scalar>(b: &Matrix<T>, tol: Tolerance) -> Result<RowVector<T>> {
    if b.rows() < 2 {
        return Err(Error::TooFewRows { found: b.rows() });
    }
    if !type_of(b, tol).has_type {
        return Err(Error::NotTyped);
    }
    let r = variation(b);
    if r.value.is_zero() {
        return Err(Error::ZeroVariation);
    }
    let (k0, l0) = r.pair();
    RowVector::new(
        (0..b.rows())
            .map(|j| if b.get(j, k0) > b.get(j, l0) { T::one() } else { -T::one() })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use crate::variation::{l1_norm, row_variation, vsum};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn worked_fixture() -> Matrix<Rational> {
        Matrix::from_scaled(5, &[&[0, 2, -4], &[-1, -1, 0], &[6, 4, 9]]).unwrap()
    }

    #[test]
    fn column_maximizer_examples() {
        let m = worked_fixture();
        let x0 = variation_maximizer(&m).unwrap();
        assert_eq!(x0, Vector::from_ratios(&[(0, 1), (1, 2), (-1, 2)]).unwrap());
        assert_eq!(l1_norm(&m.mul_vector(&x0).unwrap()), q(6, 5));
        assert_eq!(l1_norm(&x0), q(1, 1));
        assert_eq!(vsum(&x0), q(0, 1));

        let flat = Matrix::<Rational>::from_scaled(2, &[&[1, 1, 1], &[3, 3, 3]]).unwrap();
        let x = variation_maximizer(&flat).unwrap();
        assert_eq!(l1_norm(&flat.mul_vector(&x).unwrap()), q(0, 1));

        let id = Matrix::<Rational>::identity(2).unwrap();
        let x = variation_maximizer(&id).unwrap();
        assert_eq!(x, Vector::from_ratios(&[(1, 2), (-1, 2)]).unwrap());
        assert_eq!(l1_norm(&id.mul_vector(&x).unwrap()), q(1, 1));
    }

    #[test]
    fn column_maximizer_needs_two_columns() {
        let a = Matrix::<Rational>::from_scaled(1, &[&[1], &[2]]).unwrap();
        assert_eq!(variation_maximizer(&a), Err(Error::TooFewColumns { found: 1 }));
    }

    #[test]
    fn row_maximizer_worked_fixture() {
        let m = worked_fixture();
        let z0 = row_variation_maximizer(&m, Tolerance::DEFAULT).unwrap();
        assert_eq!(z0, RowVector::from_ratios(&[(1, 1), (-1, 1), (-1, 1)]).unwrap());
        let zb = z0.mul_matrix(&m).unwrap();
        assert_eq!(zb, RowVector::from_ratios(&[(-1, 1), (-1, 5), (-13, 5)]).unwrap());
        assert_eq!(row_variation(&zb), q(6, 5));
        assert_eq!(row_variation(&z0), q(1, 1));
    }

    #[test]
    fn row_maximizer_identity_and_ties() {
        let id = Matrix::<Rational>::identity(2).unwrap();
        let z0 = row_variation_maximizer(&id, Tolerance::DEFAULT).unwrap();
        assert_eq!(z0, RowVector::from_ratios(&[(1, 1), (-1, 1)]).unwrap());
        assert_eq!(z0.mul_matrix(&id).unwrap(), z0);

        // Every pair of the 3x3 identity is maximal; pair (0, 1) is used.
        let id3 = Matrix::<Rational>::identity(3).unwrap();
        let z = row_variation_maximizer(&id3, Tolerance::DEFAULT).unwrap();
        assert_eq!(z, RowVector::from_ratios(&[(1, 1), (-1, 1), (-1, 1)]).unwrap());
    }

    #[test]
    fn row_maximizer_errors() {
        let tol = Tolerance::DEFAULT;
        let one_row = Matrix::<Rational>::from_scaled(1, &[&[1, 2]]).unwrap();
        assert_eq!(row_variation_maximizer(&one_row, tol), Err(Error::TooFewRows { found: 1 }));
        let untyped = Matrix::<Rational>::from_scaled(1, &[&[1, 0], &[0, 2]]).unwrap();
        assert_eq!(row_variation_maximizer(&untyped, tol), Err(Error::NotTyped));
        let flat = Matrix::<Rational>::from_scaled(1, &[&[1, 1], &[2, 2]]).unwrap();
        assert_eq!(row_variation_maximizer(&flat, tol), Err(Error::ZeroVariation));
    }
}
