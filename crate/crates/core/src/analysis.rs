//! Convergence of powers of type-1 matrices.
//!
//! A square matrix `M` whose columns all sum to 1 has convergent powers as
//! soon as some power `M^p` has column variation below 1. The limit is the
//! rank-one projection `P = E J`, where `E` is the unique fixed vector of
//! `M` with entry sum 1, and the distance to the limit is controlled a
//! priori by
//!
//! ```text
//! var(M^k) <= var(M)^r * var(M^p)^q,   k = p q + r, 0 <= r < p
//! |M^k X - E| <= var(M^k) |X - E|      whenever vsum X = 1
//! ```
//!
//! Failing to find such a `p` below a search cutoff proves nothing, so
//! [`analyze`] reports that case as inconclusive rather than divergent.

use serde::Serialize;

use crate::elimination;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::{Domain, Scalar, Tolerance};
use crate::variation::{l1_norm, type_of, variation, vsum, TypeReport, VariationReport};

pub const DEFAULT_P_MAX: usize = 64;
pub const DEFAULT_K_REPORT: usize = 200;

fn require_type_one<T: Scalar>(m: &Matrix<T>, tol: Tolerance) -> Result<TypeReport<T>> {
    m.require_square()?;
    let report = type_of(m, tol);
    if !report.is_type(&T::one(), tol) {
        let found = if report.has_type {
            report.type_value.to_string()
        } else {
            "unequal".to_string()
        };
        return Err(Error::NotType1 { found });
    }
    Ok(report)
}

/// Smallest power with variation strictly below 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ContractionPower<T> {
    pub power: usize,
    pub variation: T,
}

struct PowerScan<T> {
    per_power: Vec<T>,
    found: Option<usize>,
}

fn scan_powers<T: Scalar>(m: &Matrix<T>, p_max: usize, tol: Tolerance) -> Result<PowerScan<T>> {
    let one = T::one();
    let mut per_power = Vec::new();
    let mut power = m.clone();
    for p in 1..=p_max {
        if p > 1 {
            power = power.matmul(m)?;
        }
        let v = variation(&power).value;
        let contracts = v.definitely_lt(&one, tol);
        per_power.push(v);
        if contracts {
            return Ok(PowerScan { per_power, found: Some(p) });
        }
    }
    Ok(PowerScan { per_power, found: None })
}

/// Smallest `p <= p_max` with `var(M^p) < 1`, or `None` if there is none.
pub fn find_contraction_power<T: Scalar>(
    m: &Matrix<T>,
    p_max: usize,
    tol: Tolerance,
) -> Result<Option<ContractionPower<T>>> {
    require_type_one(m, tol)?;
    let scan = scan_powers(m, p_max, tol)?;
    Ok(scan.found.map(|p| ContractionPower { power: p, variation: scan.per_power[p - 1].clone() }))
}

/// The fixed vector `E` of `M` with `vsum E = 1`.
///
/// Solves `(M - I) E = 0` with one row swapped for the all-ones row; the
/// rows of `M - I` always sum to zero, so one of them is redundant. The
/// last row is replaced first and each other row is tried in turn if that
/// system is singular.
pub fn stationary_vector<T: Scalar>(m: &Matrix<T>, tol: Tolerance) -> Result<Vector<T>> {
    require_type_one(m, tol)?;
    let n = m.rows();
    let shifted = m.shift_diagonal(&T::one())?;
    for replaced in (0..n).rev() {
        let system = Matrix::from_fn(n, n, |i, j| {
            if i == replaced {
                T::one()
            } else {
                shifted.get(i, j).clone()
            }
        })?;
        let rhs = Vector::basis(n, replaced)?;
        let Some(e) = elimination::solve(&system, &rhs, tol)? else {
            continue;
        };
        let me = m.mul_vector(&e)?;
        if !me.approx_eq(&e, tol) || !vsum(&e).approx_eq(&T::one(), tol) {
            let residual = l1_norm(&me.sub(&e)?);
            return Err(Error::FixedVectorResidual { residual: residual.to_string() });
        }
        return Ok(e);
    }
    Err(Error::NonUniqueFixedVector)
}

/// `P = E J`: every column equals `E`.
pub fn limit_projection<T: Scalar>(e: &Vector<T>, tol: Tolerance) -> Result<Matrix<T>> {
    let s = vsum(e);
    if !s.approx_eq(&T::one(), tol) {
        return Err(Error::VsumNotOne { found: s.to_string() });
    }
    let n = e.len();
    Matrix::from_fn(n, n, |i, _| e[i].clone())
}

/// A priori bound `var(M)^r * var(M^p)^q` on `var(M^k)`, with `k = p q + r`.
pub fn decay_bound<T: Scalar>(var_m: &T, var_mp: &T, p: usize, k: usize) -> Result<T> {
    if p == 0 {
        return Err(Error::NonPositiveInteger { what: "contraction power p" });
    }
    if k == 0 {
        return Err(Error::NonPositiveInteger { what: "power k" });
    }
    if var_mp.partial_cmp(&T::one()) != Some(std::cmp::Ordering::Less) {
        return Err(Error::NotContracting { found: var_mp.to_string() });
    }
    let (q, r) = (k / p, k % p);
    Ok(num_traits::pow(var_m.clone(), r) * num_traits::pow(var_mp.clone(), q))
}

/// Both sides of `|M^k X - E| <= var(M^k) |X - E|`.
#[derive(Debug, Clone, PartialEq)]
pub struct IterateBound<T> {
    pub actual: T,
    pub bound: T,
}

impl<T: Scalar> IterateBound<T> {
    pub fn holds(&self, tol: Tolerance) -> bool {
        self.actual <= self.bound || self.actual.approx_eq(&self.bound, tol)
    }
}

pub fn iterate_error_bound<T: Scalar>(
    m: &Matrix<T>,
    k: usize,
    x: &Vector<T>,
    e: &Vector<T>,
    tol: Tolerance,
) -> Result<IterateBound<T>> {
    require_type_one(m, tol)?;
    if k == 0 {
        return Err(Error::NonPositiveInteger { what: "power k" });
    }
    for v in [x, e] {
        let s = vsum(v);
        if !s.approx_eq(&T::one(), tol) {
            return Err(Error::VsumNotOne { found: s.to_string() });
        }
    }
    let mk = m.pow(k)?;
    let actual = l1_norm(&mk.mul_vector(x)?.sub(e)?);
    let bound = variation(&mk).value * l1_norm(&x.sub(e)?);
    Ok(IterateBound { actual, bound })
}

/// Inputs to the a priori bounds once a contraction power is known.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayParameters<T> {
    pub var_m: T,
    pub var_mp: T,
    pub p: usize,
    pub k_report: usize,
    /// `decay_bound(var_m, var_mp, p, k_report)`.
    pub variation_bound: T,
    /// `variation_bound * max_j |e_j - E|`: bounds the l1 distance from
    /// every column of `M^k_report` to `E`.
    pub column_bound: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    ConvergesTo,
    NoContractionFoundUpTo(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceAnalysis<T> {
    pub type_report: TypeReport<T>,
    pub variation: VariationReport<T>,
    pub contraction_power: Option<usize>,
    pub variation_at_p: Option<T>,
    /// `var(M^k)` for `k = 1..=p`, or up to `p_max` when no contraction was found.
    pub variation_per_power: Vec<T>,
    pub stationary: Option<Vector<T>>,
    pub projection: Option<Matrix<T>>,
    pub decay: Option<DecayParameters<T>>,
    pub verdict: Verdict,
}

impl<T: Scalar> ConvergenceAnalysis<T> {
    pub fn converges(&self) -> bool {
        self.verdict == Verdict::ConvergesTo
    }

    /// `decay_bound(.., k)` for this analysis, if a contraction was found.
    pub fn decay_bound_at(&self, k: usize) -> Option<T> {
        let d = self.decay.as_ref()?;
        decay_bound(&d.var_m, &d.var_mp, d.p, k).ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisOptions {
    pub p_max: usize,
    pub k_report: usize,
    pub tol: Tolerance,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { p_max: DEFAULT_P_MAX, k_report: DEFAULT_K_REPORT, tol: Tolerance::DEFAULT }
    }
}

/// `max_j |e_j - E|` over the standard basis.
pub fn max_basis_distance<T: Scalar>(e: &Vector<T>) -> Result<T> {
    let n = e.len();
    let mut best = T::zero();
    for j in 0..n {
        let d = l1_norm(&Vector::basis(n, j)?.sub(e)?);
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

/// Full convergence analysis of a type-1 matrix.
pub fn analyze<T: Scalar>(m: &Matrix<T>, opts: &AnalysisOptions) -> Result<ConvergenceAnalysis<T>> {
    if opts.p_max == 0 {
        return Err(Error::NonPositiveInteger { what: "p_max" });
    }
    if opts.k_report == 0 {
        return Err(Error::NonPositiveInteger { what: "k_report" });
    }
    let type_report = require_type_one(m, opts.tol)?;
    let var_report = variation(m);
    let scan = scan_powers(m, opts.p_max, opts.tol)?;

    let Some(p) = scan.found else {
        return Ok(ConvergenceAnalysis {
            type_report,
            variation: var_report,
            contraction_power: None,
            variation_at_p: None,
            variation_per_power: scan.per_power,
            stationary: None,
            projection: None,
            decay: None,
            verdict: Verdict::NoContractionFoundUpTo(opts.p_max),
        });
    };

    let e = stationary_vector(m, opts.tol)?;
    let projection = limit_projection(&e, opts.tol)?;
    let var_m = var_report.value.clone();
    let var_mp = scan.per_power[p - 1].clone();
    // Floats can land in (1 - tol, 1) only through definitely_lt, so var_mp < 1 here.
    let variation_bound = decay_bound(&var_m, &var_mp, p, opts.k_report)?;
    let column_bound = variation_bound.clone() * max_basis_distance(&e)?;
    Ok(ConvergenceAnalysis {
        type_report,
        variation: var_report,
        contraction_power: Some(p),
        variation_at_p: Some(var_mp.clone()),
        variation_per_power: scan.per_power,
        stationary: Some(e),
        projection: Some(projection),
        decay: Some(DecayParameters { var_m, var_mp, p, k_report: opts.k_report, variation_bound, column_bound }),
        verdict: Verdict::ConvergesTo,
    })
}

/// Returns the type `c` of a square typed matrix after checking that
/// `M - cI` is singular.
///
/// # Panics
///
/// If `M - cI` turns out nonsingular. Column sums all equal to `c` make
/// the rows of `M - cI` sum to zero, so this would be an arithmetic bug.
pub fn type_eigenvalue_certificate<T: Scalar>(m: &Matrix<T>, tol: Tolerance) -> Result<T> {
    m.require_square()?;
    let report = type_of(m, tol);
    if !report.has_type {
        return Err(Error::NotTyped);
    }
    let c = report.type_value;
    let shifted = m.shift_diagonal(&c)?;
    let singular = match T::DOMAIN {
        Domain::Rational => elimination::rank(&shifted, tol) < m.rows(),
        Domain::Float => elimination::smallest_relative_pivot(&shifted, tol) <= tol.value(),
    };
    assert!(singular, "type {c} is not an eigenvalue: M - cI is nonsingular");
    Ok(c)
}

/// The cases of the complete 2x2 analysis of `[[1-a, b], [a, 1-b]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TwoByTwoCase {
    /// `0 < c < 2`: powers converge.
    ConvergesGeneric,
    /// `c != 0` outside `(0, 2)`: powers diverge.
    DivergesGeneric,
    /// `c = 0`, `a != 0`: `M^k = I + k a [[-1, -1], [1, 1]]`.
    DivergesLinear,
    /// `a = b = 0`.
    Identity,
}

impl TwoByTwoCase {
    pub fn name(self) -> &'static str {
        match self {
            TwoByTwoCase::ConvergesGeneric => "ConvergesGeneric",
            TwoByTwoCase::DivergesGeneric => "DivergesGeneric",
            TwoByTwoCase::DivergesLinear => "DivergesLinear",
            TwoByTwoCase::Identity => "Identity",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification2x2<T> {
    pub case: TwoByTwoCase,
    pub a: T,
    pub b: T,
    /// `a + b`.
    pub c: T,
    /// `|1 - c|`.
    pub variation: T,
    /// `(1, 1 - c)`.
    pub eigenvalues: (T, T),
    /// `(b, a)` and `(1, -1)`, given when `c != 0`.
    pub eigenvectors: Option<(Vector<T>, Vector<T>)>,
    /// `(b/c, a/c)` in the convergent case.
    pub stationary: Option<Vector<T>>,
}

impl<T: Scalar> Classification2x2<T> {
    pub fn matrix(&self) -> Matrix<T> {
        two_by_two(&self.a, &self.b)
    }

    /// Closed form of `M^k` where one is known without diagonalizing.
    pub fn closed_form_power(&self, k: usize) -> Option<Matrix<T>> {
        match self.case {
            TwoByTwoCase::Identity => Matrix::identity(2).ok(),
            TwoByTwoCase::DivergesLinear => {
                let ka = T::from_int(k as i64) * self.a.clone();
                let drift = Matrix::from_scaled(1, &[&[-1, -1], &[1, 1]]).ok()?.scale(&ka);
                Matrix::identity(2).ok()?.add(&drift).ok()
            }
            _ => None,
        }
    }
}

/// `[[1-a, b], [a, 1-b]]`, the general 2x2 matrix of type 1.
pub fn two_by_two<T: Scalar>(a: &T, b: &T) -> Matrix<T> {
    let one = T::one();
    Matrix::from_rows(vec![
        vec![one.clone() - a.clone(), b.clone()],
        vec![a.clone(), one - b.clone()],
    ])
    .expect("2x2 shape is valid")
}

pub fn classify_2x2<T: Scalar>(a: T, b: T, tol: Tolerance) -> Classification2x2<T> {
    let one = T::one();
    let two = T::from_int(2);
    let c = a.clone() + b.clone();
    let variation = (one.clone() - c.clone()).abs();
    let eigenvalues = (one.clone(), one.clone() - c.clone());
    let c_zero = c.is_zero_tol(tol);
    let case = if c_zero {
        if a.is_zero_tol(tol) && b.is_zero_tol(tol) {
            TwoByTwoCase::Identity
        } else {
            TwoByTwoCase::DivergesLinear
        }
    } else if c.is_positive_tol(tol) && c.definitely_lt(&two, tol) {
        TwoByTwoCase::ConvergesGeneric
    } else {
        TwoByTwoCase::DivergesGeneric
    };
    let eigenvectors = (!c_zero).then(|| {
        (
            Vector::new(vec![b.clone(), a.clone()]).expect("length 2"),
            Vector::new(vec![one.clone(), -one.clone()]).expect("length 2"),
        )
    });
    let stationary = (case == TwoByTwoCase::ConvergesGeneric).then(|| {
        Vector::new(vec![b.clone() / c.clone(), a.clone() / c.clone()]).expect("length 2")
    });
    Classification2x2 { case, a, b, c, variation, eigenvalues, eigenvectors, stationary }
}
