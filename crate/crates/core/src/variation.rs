//! Entry sums, the l1 norm, column variation and matrix type.
//!
//! The column variation of an `m x n` matrix is half the largest l1
//! distance between two of its columns. It is a seminorm, and on vectors
//! whose entries sum to zero it bounds how much the matrix can stretch
//! them in the l1 norm.

use crate::matrix::{Matrix, RowVector, Vector};
use crate::scalar::{Scalar, Tolerance};

/// Sum of the entries, i.e. `J X`.
pub fn vsum<T: Scalar>(x: &Vector<T>) -> T {
    x.iter().fold(T::zero(), |acc, v| acc + v.clone())
}

/// The l1 norm `sum |x_j|`.
pub fn l1_norm<T: Scalar>(x: &Vector<T>) -> T {
    x.iter().fold(T::zero(), |acc, v| acc + v.abs())
}

/// l1 distance between columns `j` and `k` of `a`.
pub fn column_distance<T: Scalar>(a: &Matrix<T>, j: usize, k: usize) -> T {
    (0..a.rows()).fold(T::zero(), |acc, i| acc + (a.get(i, j).clone() - a.get(i, k).clone()).abs())
}

/// Column variation together with a column pair attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct VariationReport<T> {
    pub value: T,
    /// Zero-based column indices with `arg_j < arg_k`, except `(0, 0)` for
    /// single-column matrices.
    pub arg_j: usize,
    pub arg_k: usize,
}

impl<T> VariationReport<T> {
    pub fn pair(&self) -> (usize, usize) {
        (self.arg_j, self.arg_k)
    }
}

/// Half the largest l1 distance between two columns of `a`.
///
/// Ties go to the lexicographically smallest pair `(j, k)`, `j < k`. A
/// single column has variation 0 and reports the pair `(0, 0)`.
pub fn variation<T: Scalar>(a: &Matrix<T>) -> VariationReport<T> {
    let n = a.cols();
    let mut best = (T::zero(), 0, 0);
    let mut first = true;
    for j in 0..n {
        for k in j + 1..n {
            let d = column_distance(a, j, k);
            if first || d > best.0 {
                best = (d, j, k);
                first = false;
            }
        }
    }
    let (dist, arg_j, arg_k) = best;
    VariationReport { value: dist / T::from_int(2), arg_j, arg_k }
}

/// Variation of a row: `(max z - min z) / 2`.
pub fn row_variation<T: Scalar>(z: &RowVector<T>) -> T {
    let mut it = z.iter();
    let first = it.next().expect("row vectors are non-empty").clone();
    let (lo, hi) = it.fold((first.clone(), first), |(lo, hi), x| {
        (if *x < lo { x.clone() } else { lo }, if *x > hi { x.clone() } else { hi })
    });
    (hi - lo) / T::from_int(2)
}

/// Result of checking whether all column sums agree.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeReport<T> {
    pub has_type: bool,
    /// Sum of the first column.
    pub type_value: T,
    /// Largest `|column sum - type_value|`.
    pub max_deviation: T,
}

impl<T: Scalar> TypeReport<T> {
    /// The type when there is one.
    pub fn value(&self) -> Option<&T> {
        self.has_type.then_some(&self.type_value)
    }

    pub fn is_type(&self, c: &T, tol: Tolerance) -> bool {
        self.has_type && self.type_value.approx_eq(c, tol)
    }
}

pub fn column_sums<T: Scalar>(a: &Matrix<T>) -> Vec<T> {
    (0..a.cols())
        .map(|j| (0..a.rows()).fold(T::zero(), |acc, i| acc + a.get(i, j).clone()))
        .collect()
}

/// Decides whether `a` has a type, i.e. `J A = a J` for some `a`.
pub fn type_of<T: Scalar>(a: &Matrix<T>, tol: Tolerance) -> TypeReport<T> {
    let sums = column_sums(a);
    let type_value = sums[0].clone();
    let has_type = sums.iter().all(|s| s.approx_eq(&type_value, tol));
    let max_deviation = sums
        .iter()
        .map(|s| (s.clone() - type_value.clone()).abs())
        .fold(T::zero(), |m, d| if d > m { d } else { m });
    TypeReport { has_type, type_value, max_deviation }
}
