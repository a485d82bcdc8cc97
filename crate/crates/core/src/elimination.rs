//! Gaussian elimination: determinant, rank and square solves.
//!
//! Pivoting depends on the domain. Rationals take the first nonzero entry
//! in the column, which keeps results bit-exact; floats use partial
//! pivoting on the largest magnitude and treat entries below
//! `tol * max|a_ij|` as zero.

use crate::error::Result;
use crate::matrix::{Matrix, Vector};
use crate::scalar::{Domain, Scalar, Tolerance};

/// Outcome of forward elimination on a (possibly augmented) matrix.
struct Echelon<T> {
    work: Vec<Vec<T>>,
    pivot_cols: Vec<usize>,
    pivots: Vec<T>,
    swaps: usize,
}

fn choose_pivot<T: Scalar>(work: &[Vec<T>], col: usize, from: usize, scale: &T, tol: Tolerance) -> Option<usize> {
    let candidates = (from..work.len()).filter(|&r| !work[r][col].negligible(scale, tol));
    match T::DOMAIN {
        Domain::Rational => candidates.into_iter().next(),
        Domain::Float => candidates.max_by(|&a, &b| {
            work[a][col].abs().partial_cmp(&work[b][col].abs()).unwrap_or(std::cmp::Ordering::Equal)
        }),
    }
}

/// Eliminates over the first `cols` columns of `work`.
fn forward<T: Scalar>(mut work: Vec<Vec<T>>, cols: usize, tol: Tolerance) -> Echelon<T> {
    let scale = work
        .iter()
        .flat_map(|r| r[..cols].iter())
        .map(|x| x.abs())
        .fold(T::zero(), |m, x| if x > m { x } else { m });
    let mut pivot_cols = Vec::new();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == work.len() {
            break;
        }
        let Some(p) = choose_pivot(&work, col, row, &scale, tol) else {
            continue;
        };
        if p != row {
            work.swap(p, row);
            swaps += 1;
        }
        let pivot = work[row][col].clone();
        for r in row + 1..work.len() {
            if work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone() / pivot.clone();
            for c in col..work[r].len() {
                let delta = factor.clone() * work[row][c].clone();
                work[r][c] = work[r][c].clone() - delta;
            }
        }
        pivot_cols.push(col);
        pivots.push(pivot);
        row += 1;
    }
    Echelon { work, pivot_cols, pivots, swaps }
}

fn rows_of<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Determinant of a square matrix. Exact for rationals.
pub fn determinant<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    m.require_square()?;
    // Floats keep every nonzero pivot so the product stays a true determinant.
    let ech = forward(rows_of(m), m.cols(), Tolerance::new(0.0).unwrap());
    if ech.pivots.len() < m.rows() {
        return Ok(T::zero());
    }
    let det = ech.pivots.into_iter().fold(T::one(), |acc, p| acc * p);
    Ok(if ech.swaps % 2 == 1 { -det } else { det })
}

/// Numerical rank; exact for rationals.
pub fn rank<T: Scalar>(m: &Matrix<T>, tol: Tolerance) -> usize {
    forward(rows_of(m), m.cols(), tol).pivots.len()
}

/// Smallest pivot magnitude relative to the largest entry, over a full
/// elimination in which near-zero columns count as zero pivots.
pub fn smallest_relative_pivot<T: Scalar>(m: &Matrix<T>, tol: Tolerance) -> f64 {
    let n = m.rows().min(m.cols());
    let ech = forward(rows_of(m), m.cols(), tol);
    if ech.pivots.len() < n {
        return 0.0;
    }
    let scale = m.max_abs().to_f64();
    if scale == 0.0 {
        return 0.0;
    }
    ech.pivots.iter().map(|p| p.abs().to_f64() / scale).fold(f64::INFINITY, f64::min)
}

/// Solves `a x = b` for square nonsingular `a`; `None` when singular.
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &Vector<T>, tol: Tolerance) -> Result<Option<Vector<T>>> {
    a.require_square()?;
    let n = a.rows();
    if b.len() != n {
        return Err(crate::Error::LengthMismatch { left: n, right: b.len() });
    }
    let augmented = (0..n)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let ech = forward(augmented, n, tol);
    if ech.pivots.len() < n {
        return Ok(None);
    }
    debug_assert!(ech.pivot_cols.iter().enumerate().all(|(i, &c)| i == c));
    let work = ech.work;
    let mut x = vec![T::zero(); n];
    for i in (0..n).rev() {
        let mut acc = work[i][n].clone();
        for j in i + 1..n {
            acc = acc - work[i][j].clone() * x[j].clone();
        }
        x[i] = acc / work[i][i].clone();
    }
    Vector::new(x).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn determinant_small_cases() {
        let m = Matrix::<Rational>::from_scaled(1, &[&[2, 0], &[1, 3]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), q(6, 1));
        let swap = Matrix::<Rational>::from_scaled(1, &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(determinant(&swap).unwrap(), q(-1, 1));
        let singular = Matrix::<Rational>::from_scaled(1, &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(determinant(&singular).unwrap(), q(0, 1));
        let f = Matrix::<f64>::from_scaled(1, &[&[4, 3], &[6, 3]]).unwrap();
        assert!((determinant(&f).unwrap() + 6.0).abs() < 1e-12);
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        // 3x3 cofactor expansion as an independent route.
        let m = Matrix::<Rational>::from_scaled(7, &[&[1, -2, 3], &[0, 4, -1], &[5, 2, 2]]).unwrap();
        let e = |i, j| m.get(i, j).clone();
        let cof = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        assert_eq!(determinant(&m).unwrap(), cof);
    }

    #[test]
    fn rank_detects_dependence() {
        let m = Matrix::<Rational>::from_scaled(1, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).unwrap();
        assert_eq!(rank(&m, Tolerance::DEFAULT), 2);
        let f = m.map(|x| x.to_f64());
        assert_eq!(rank(&f, Tolerance::DEFAULT), 2);
        assert_eq!(rank(&Matrix::<f64>::zeros(2, 3).unwrap(), Tolerance::DEFAULT), 0);
    }

    #[test]
    fn solve_exact_system() {
        let a = Matrix::<Rational>::from_scaled(1, &[&[2, 1], &[1, 3]]).unwrap();
        let b = Vector::from_ratios(&[(3, 1), (5, 1)]).unwrap();
        let x = solve(&a, &b, Tolerance::DEFAULT).unwrap().unwrap();
        assert_eq!(x, Vector::from_ratios(&[(4, 5), (7, 5)]).unwrap());
        assert_eq!(a.mul_vector(&x).unwrap(), b);
    }

    #[test]
    fn solve_reports_singular() {
        let a = Matrix::<f64>::from_scaled(1, &[&[1, 2], &[2, 4]]).unwrap();
        let b = Vector::from_ratios(&[(1, 1), (2, 1)]).unwrap();
        assert!(solve(&a, &b, Tolerance::DEFAULT).unwrap().is_none());
    }

    #[test]
    fn smallest_pivot_zero_for_singular() {
        let a = Matrix::<f64>::from_scaled(1, &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(smallest_relative_pivot(&a, Tolerance::DEFAULT), 0.0);
        let b = Matrix::<f64>::identity(3).unwrap();
        assert_eq!(smallest_relative_pivot(&b, Tolerance::DEFAULT), 1.0);
    }
}
