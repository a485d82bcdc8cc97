//! Non-negative matrices and their sign patterns.
//!
//! For a non-negative matrix of type `a`, every column has l1 norm `a`, so
//! `var A <= a`, with equality exactly when two columns have disjoint
//! supports. That turns "is the variation strictly below the type?" into a
//! question about the zero/positive pattern alone, which is what the
//! pattern algebra here answers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Scalar, Tolerance};
use crate::variation::{type_of, variation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Zero,
    Plus,
}

impl Sign {
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

/// Zero/positive pattern of a non-negative `m x n` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignPattern {
    rows: usize,
    cols: usize,
    cells: Vec<Sign>,
}

impl SignPattern {
    pub fn new(rows: usize, cols: usize, cells: Vec<Sign>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if cells.len() != rows * cols {
            return Err(Error::EntryCount { expected: rows * cols, got: cells.len() });
        }
        Ok(SignPattern { rows, cols, cells })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Sign) -> Result<Self> {
        let cells = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        Self::new(rows, cols, cells)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| if i == j { Sign::Plus } else { Sign::Zero })
    }

    pub fn filled(rows: usize, cols: usize, sign: Sign) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| sign)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Sign {
        self.cells[i * self.cols + j]
    }

    pub fn all_plus(&self) -> bool {
        self.cells.iter().all(|s| s.is_plus())
    }

    pub fn all_zero(&self) -> bool {
        !self.cells.iter().any(|s| s.is_plus())
    }

    /// Powers `P^1..=P^count`.
    pub fn powers(&self, count: usize) -> Result<Vec<SignPattern>> {
        let mut out = Vec::with_capacity(count);
        let mut acc = self.clone();
        for k in 1..=count {
            if k > 1 {
                acc = pattern_product(&acc, self)?;
            }
            out.push(acc.clone());
        }
        Ok(out)
    }
}

/// Parses rows separated by newlines or `;`, entries separated by
/// whitespace or commas. `0` is zero; `+` or any positive number is plus.
impl FromStr for SignPattern {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let rows: Vec<Vec<Sign>> = s
            .split(['\n', ';'])
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|line| {
                line.split([',', ' ', '\t'])
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(parse_sign)
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<_, _>>()?;
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(format!("row {} has {} entries, expected {n}", i + 1, rows[i].len()));
        }
        SignPattern::new(m, n, rows.into_iter().flatten().collect()).map_err(|e| e.to_string())
    }
}

fn parse_sign(token: &str) -> std::result::Result<Sign, String> {
    match token {
        "+" => Ok(Sign::Plus),
        "0" => Ok(Sign::Zero),
        other => match crate::scalar::parse_rational(other) {
            Ok(v) if v > num_traits::Zero::zero() => Ok(Sign::Plus),
            Ok(v) if num_traits::Zero::is_zero(&v) => Ok(Sign::Zero),
            _ => Err(format!("expected 0, + or a non-negative number, got {other:?}")),
        },
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if self.get(i, j).is_plus() { "+" } else { "0" })?;
            }
        }
        Ok(())
    }
}

fn check_non_negative<T: Scalar>(a: &Matrix<T>, tol: Tolerance) -> Result<()> {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.get(i, j).is_negative_tol(tol) {
                return Err(Error::NegativeEntry { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Entrywise zero/positive map. Float entries count as positive only above
/// `tol`; entries below `-tol` are rejected.
pub fn sign_pattern<T: Scalar>(a: &Matrix<T>, tol: Tolerance) -> Result<SignPattern> {
    check_non_negative(a, tol)?;
    SignPattern::from_fn(a.rows(), a.cols(), |i, j| {
        if a.get(i, j).is_positive_tol(tol) {
            Sign::Plus
        } else {
            Sign::Zero
        }
    })
}

/// Boolean product: `(i, k)` is plus iff some `j` has both `P(i, j)` and
/// `Q(j, k)` plus. Exact for the supports of products of non-negative matrices.
pub fn pattern_product(p: &SignPattern, q: &SignPattern) -> Result<SignPattern> {
    if p.cols != q.rows {
        return Err(Error::DimensionMismatch {
            op: "pattern product",
            left: (p.rows, p.cols),
            right: (q.rows, q.cols),
        });
    }
    SignPattern::from_fn(p.rows, q.cols, |i, k| {
        if (0..p.cols).any(|j| p.get(i, j).is_plus() && q.get(j, k).is_plus()) {
            Sign::Plus
        } else {
            Sign::Zero
        }
    })
}

/// `P^k` for `k >= 1`.
pub fn pattern_power(p: &SignPattern, k: usize) -> Result<SignPattern> {
    if p.rows != p.cols {
        return Err(Error::NotSquare { rows: p.rows, cols: p.cols });
    }
    if k == 0 {
        return SignPattern::identity(p.rows);
    }
    let mut acc = p.clone();
    for _ in 1..k {
        acc = pattern_product(&acc, p)?;
    }
    Ok(acc)
}

/// Smallest `k <= k_max` with `P^k` entirely positive (the regularity index).
pub fn first_positive_power(p: &SignPattern, k_max: usize) -> Result<Option<usize>> {
    if p.rows != p.cols {
        return Err(Error::NotSquare { rows: p.rows, cols: p.cols });
    }
    let mut acc = p.clone();
    for k in 1..=k_max {
        if k > 1 {
            acc = pattern_product(&acc, p)?;
        }
        if acc.all_plus() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// True iff every pair of columns shares a row where both are positive.
pub fn pairwise_positive_overlap(p: &SignPattern) -> bool {
    (0..p.cols).all(|k| {
        (k..p.cols).all(|l| (0..p.rows).any(|j| p.get(j, k).is_plus() && p.get(j, l).is_plus()))
    })
}

/// Type of a non-negative typed matrix, checked positive.
fn positive_type<T: Scalar>(a: &Matrix<T>, tol: Tolerance) -> Result<T> {
    check_non_negative(a, tol)?;
    let t = type_of(a, tol);
    if !t.has_type {
        return Err(Error::NotTyped);
    }
    if !t.type_value.is_positive_tol(tol) {
        return Err(Error::NonPositiveType { found: t.type_value.to_string() });
    }
    Ok(t.type_value)
}

/// Decides `var A < a` for a non-negative matrix of type `a > 0` from its
/// sign pattern.
///
/// In the rational domain the answer is cross-checked against the direct
/// comparison and a disagreement panics; for floats the pattern answer is
/// returned as is.
pub fn strict_variation_test<T: Scalar>(a: &Matrix<T>, tol: Tolerance) -> Result<bool> {
    let type_value = positive_type(a, tol)?;
    let by_pattern = pairwise_positive_overlap(&sign_pattern(a, tol)?);
    if T::DOMAIN == crate::scalar::Domain::Rational {
        let direct = variation(a).value < type_value;
        assert_eq!(by_pattern, direct, "sign-pattern test disagrees with var A < a");
    }
    Ok(by_pattern)
}

/// `var A <= a` for a non-negative matrix of type `a`. Always true; kept
/// as a checkable statement for test suites.
pub fn variation_type_bound_check<T: Scalar>(a: &Matrix<T>, tol: Tolerance) -> Result<bool> {
    check_non_negative(a, tol)?;
    let t = type_of(a, tol);
    if !t.has_type {
        return Err(Error::NotTyped);
    }
    let v = variation(a).value;
    Ok(v <= t.type_value || v.approx_eq(&t.type_value, tol))
}

/// Checks that `m` is a 3x3 Markov matrix.
fn check_markov_3x3<T: Scalar>(m: &Matrix<T>, tol: Tolerance) -> Result<()> {
    if m.shape() != (3, 3) {
        return Err(Error::DimensionMismatch { op: "3x3 criterion", left: m.shape(), right: (3, 3) });
    }
    check_non_negative(m, tol)?;
    let t = type_of(m, tol);
    if !t.is_type(&T::one(), tol) {
        let found = if t.has_type { t.type_value.to_string() } else { "unequal".into() };
        return Err(Error::NotType1 { found });
    }
    Ok(())
}

/// For a 3x3 Markov matrix, `var(M^3) < 1`. Equivalent to the powers of
/// `M` converging to a rank-one projection.
pub fn criterion_3x3<T: Scalar>(m: &Matrix<T>, tol: Tolerance) -> Result<bool> {
    check_markov_3x3(m, tol)?;
    let cube = m.pow(3)?;
    Ok(variation(&cube).value.definitely_lt(&T::one(), tol))
}
