//! Serializable reports for the command-line tool.
//!
//! Scalars are written as strings: exact `p/q` text in the rational
//! domain, 17 significant digits for floats. Column indices are 1-based.
//! Every document carries `"schema": "stovar/1"`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::{AnalysisOptions, Classification2x2, ConvergenceAnalysis, Verdict};
use crate::error::Result;
use crate::matrix::{Matrix, Vector};
use crate::nonneg::{first_positive_power, pairwise_positive_overlap, SignPattern};
use crate::scalar::{Domain, Scalar};
use crate::variation::{type_of, variation, TypeReport, VariationReport};

pub const SCHEMA: &str = "stovar/1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputEcho {
    pub rows: usize,
    pub cols: usize,
    pub domain: Domain,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TypeOut {
    pub has_type: bool,
    pub value: String,
    pub max_deviation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VariationOut {
    pub value: String,
    pub decimal: String,
    /// 1-based column pair.
    pub pair: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecayRow {
    pub k: usize,
    /// A priori bound on `var(M^k)`.
    pub bound: String,
    /// Actual `var(M^k)`.
    pub variation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputEcho,
    #[serde(rename = "type")]
    pub type_report: TypeOut,
    pub variation: VariationOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub p_max: usize,
    pub k_report: usize,
    pub contraction_power: Option<usize>,
    pub variation_at_p: Option<String>,
    pub variation_per_power: Vec<String>,
    pub stationary: Option<Vec<String>>,
    pub projection: Option<Vec<Vec<String>>>,
    pub decay_table: Vec<DecayRow>,
    /// Bound on the l1 distance from each column of `M^k_report` to `E`.
    pub column_bound_at_k_report: Option<String>,
    pub verdict: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VariationCommandReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputEcho,
    #[serde(rename = "type")]
    pub type_report: TypeOut,
    pub variation: VariationOut,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub rows: usize,
    pub cols: usize,
    pub k_max: usize,
    /// Powers 1, 2, ... up to the first positive one, or up to `k_max`.
    pub powers: Vec<Vec<String>>,
    pub first_positive_power: Option<usize>,
    pub pairwise_overlap: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub a: String,
    pub b: String,
    pub c: String,
    pub case: &'static str,
    pub variation: String,
    pub eigenvalues: [String; 2],
    pub eigenvectors: Option<[Vec<String>; 2]>,
    pub stationary: Option<Vec<String>>,
}

fn s<T: Scalar>(x: &T) -> String {
    x.to_report_string()
}

fn vec_strings<T: Scalar>(v: &Vector<T>) -> Vec<String> {
    v.iter().map(s).collect()
}

fn matrix_strings<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(s).collect()).collect()
}

fn type_out<T: Scalar>(t: &TypeReport<T>) -> TypeOut {
    TypeOut { has_type: t.has_type, value: s(&t.type_value), max_deviation: s(&t.max_deviation) }
}

fn variation_out<T: Scalar>(v: &VariationReport<T>) -> VariationOut {
    VariationOut {
        value: s(&v.value),
        decimal: v.value.to_f64().to_report_string(),
        pair: [v.arg_j + 1, v.arg_k + 1],
    }
}

fn echo<T: Scalar>(m: &Matrix<T>) -> InputEcho {
    InputEcho { rows: m.rows(), cols: m.cols(), domain: T::DOMAIN }
}

/// `1..=p`, then `2p, 4p, ...` below `k_report`, then `k_report`.
fn decay_ks(p: usize, k_report: usize) -> Vec<usize> {
    let mut ks: Vec<usize> = (1..=p.min(k_report)).collect();
    let mut k = 2 * p;
    while k < k_report {
        ks.push(k);
        k *= 2;
    }
    if ks.last() != Some(&k_report) {
        ks.push(k_report);
    }
    ks
}

impl AnalysisReport {
    pub fn build<T: Scalar>(m: &Matrix<T>, a: &ConvergenceAnalysis<T>, opts: &AnalysisOptions) -> Result<Self> {
        let mut decay_table = Vec::new();
        if let Some(d) = &a.decay {
            let ks = decay_ks(d.p, opts.k_report);
            let mut power = m.clone();
            let mut at = 1;
            for k in ks {
                while at < k {
                    power = power.matmul(m)?;
                    at += 1;
                }
                let bound = a.decay_bound_at(k).expect("decay parameters present");
                decay_table.push(DecayRow { k, bound: s(&bound), variation: s(&variation(&power).value) });
            }
        }
        Ok(AnalysisReport {
            schema: SCHEMA,
            command: "analyze",
            input: echo(m),
            type_report: type_out(&a.type_report),
            variation: variation_out(&a.variation),
            tolerance: (T::DOMAIN == Domain::Float).then(|| opts.tol.value()),
            p_max: opts.p_max,
            k_report: opts.k_report,
            contraction_power: a.contraction_power,
            variation_at_p: a.variation_at_p.as_ref().map(s),
            variation_per_power: a.variation_per_power.iter().map(s).collect(),
            stationary: a.stationary.as_ref().map(vec_strings),
            projection: a.projection.as_ref().map(matrix_strings),
            decay_table,
            column_bound_at_k_report: a.decay.as_ref().map(|d| s(&d.column_bound)),
            verdict: match a.verdict {
                Verdict::ConvergesTo => "ConvergesTo",
                Verdict::NoContractionFoundUpTo(_) => "NoContractionFoundUpTo",
            },
        })
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "matrix: {}x{} ({})", self.input.rows, self.input.cols, self.input.domain);
        let _ = writeln!(out, "type: {}", self.type_report.value);
        let _ = writeln!(
            out,
            "variation: {} (columns {} and {})",
            self.variation.value, self.variation.pair[0], self.variation.pair[1]
        );
        match (self.contraction_power, &self.variation_at_p) {
            (Some(p), Some(v)) => {
                let _ = writeln!(out, "contraction power: {p}, var(M^{p}) = {v}");
            }
            _ => {
                let _ = writeln!(
                    out,
                    "no power up to {} has variation below 1 (inconclusive)",
                    self.p_max
                );
            }
        }
        if let Some(e) = &self.stationary {
            let _ = writeln!(out, "stationary vector E: ({})", e.join(", "));
        }
        if let Some(p) = &self.projection {
            let _ = writeln!(out, "limit projection P = E J:");
            for row in p {
                let _ = writeln!(out, "  [{}]", row.join("  "));
            }
        }
        if !self.decay_table.is_empty() {
            let _ = writeln!(out, "decay bounds (k, bound on var(M^k), var(M^k)):");
            for r in &self.decay_table {
                let _ = writeln!(out, "  {:>5}  {}  {}", r.k, abbreviate(&r.bound), abbreviate(&r.variation));
            }
        }
        if let Some(b) = &self.column_bound_at_k_report {
            let _ = writeln!(out, "column distance to E at k = {}: <= {}", self.k_report, abbreviate(b));
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }
}

/// Shortens very long exact fractions in the human summary.
fn abbreviate(text: &str) -> String {
    if text.len() <= 40 {
        return text.to_string();
    }
    match crate::scalar::parse_rational(text) {
        Ok(q) => format!("~{}", q.to_f64().to_report_string()),
        Err(_) => text.to_string(),
    }
}

impl VariationCommandReport {
    pub fn build<T: Scalar>(m: &Matrix<T>, tol: crate::scalar::Tolerance) -> Self {
        VariationCommandReport {
            schema: SCHEMA,
            command: "variation",
            input: echo(m),
            type_report: type_out(&type_of(m, tol)),
            variation: variation_out(&variation(m)),
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "matrix: {}x{} ({})\nvariation: {} (columns {} and {})\ntype: {}\n",
            self.input.rows,
            self.input.cols,
            self.input.domain,
            self.variation.value,
            self.variation.pair[0],
            self.variation.pair[1],
            if self.type_report.has_type { self.type_report.value.as_str() } else { "none" },
        )
    }
}

impl PatternReport {
    pub fn build(p: &SignPattern, k_max: usize) -> Result<Self> {
        let first = first_positive_power(p, k_max)?;
        let shown = first.unwrap_or(k_max);
        let powers = p
            .powers(shown)?
            .iter()
            .map(|q| q.to_string().lines().map(str::to_string).collect())
            .collect();
        Ok(PatternReport {
            schema: SCHEMA,
            command: "pattern",
            rows: p.rows(),
            cols: p.cols(),
            k_max,
            powers,
            first_positive_power: first,
            pairwise_overlap: pairwise_positive_overlap(p),
        })
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for (k, rows) in self.powers.iter().enumerate() {
            let _ = writeln!(out, "power {}:", k + 1);
            for r in rows {
                let _ = writeln!(out, "  {r}");
            }
        }
        match self.first_positive_power {
            Some(k) => {
                let _ = writeln!(out, "first positive power: {k}");
            }
            None => {
                let _ = writeln!(out, "first positive power: none up to {}", self.k_max);
            }
        }
        let _ = writeln!(out, "pairwise positive overlap: {}", self.pairwise_overlap);
        out
    }
}

impl ClassifyReport {
    pub fn build<T: Scalar>(c: &Classification2x2<T>) -> Self {
        ClassifyReport {
            schema: SCHEMA,
            command: "classify2x2",
            a: s(&c.a),
            b: s(&c.b),
            c: s(&c.c),
            case: c.case.name(),
            variation: s(&c.variation),
            eigenvalues: [s(&c.eigenvalues.0), s(&c.eigenvalues.1)],
            eigenvectors: c.eigenvectors.as_ref().map(|(u, v)| [vec_strings(u), vec_strings(v)]),
            stationary: c.stationary.as_ref().map(vec_strings),
        }
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}\nc = {}, var M = {}, eigenvalues {} and {}\n",
            self.case, self.c, self.variation, self.eigenvalues[0], self.eigenvalues[1]
        );
        if let Some(e) = &self.stationary {
            let _ = writeln!(out, "stationary vector: ({})", e.join(", "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::analyze;
    use crate::scalar::Rational;

    #[test]
    fn decay_ks_layout() {
        assert_eq!(decay_ks(2, 200), vec![1, 2, 4, 8, 16, 32, 64, 128, 200]);
        assert_eq!(decay_ks(3, 3), vec![1, 2, 3]);
        assert_eq!(decay_ks(5, 2), vec![1, 2]);
        assert_eq!(decay_ks(1, 1), vec![1]);
    }

    #[test]
    fn worked_fixture_report_fields() {
        let m = Matrix::<Rational>::from_scaled(5, &[&[0, 2, -4], &[-1, -1, 0], &[6, 4, 9]]).unwrap();
        let opts = AnalysisOptions::default();
        let a = analyze(&m, &opts).unwrap();
        let r = AnalysisReport::build(&m, &a, &opts).unwrap();
        assert_eq!(r.variation.value, "6/5");
        assert_eq!(r.variation.pair, [2, 3]);
        assert_eq!(r.variation_at_p.as_deref(), Some("18/25"));
        assert_eq!(r.stationary, Some(vec!["-2".to_string(), "1/3".into(), "8/3".into()]));
        assert_eq!(r.tolerance, None);
        for row in &r.decay_table {
            let bound = crate::scalar::parse_rational(&row.bound).unwrap();
            let actual = crate::scalar::parse_rational(&row.variation).unwrap();
            assert!(actual <= bound, "k = {}", row.k);
        }
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["schema"], "stovar/1");
        assert_eq!(json["type"]["value"], "1");
        assert!(r.summary().contains("stationary vector E: (-2, 1/3, 8/3)"));
    }
}
